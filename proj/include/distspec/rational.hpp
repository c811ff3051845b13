#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace distspec {

using Int = mpz_class;
using Rat = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DisconnectedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotEquitable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoClosedForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "p/q" with q omitted when 1; always fully reduced, sign on the numerator.
inline std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

// exact value (p + q*sqrt(s)) / r with s a non-negative integer, r > 0.
// s == 0 encodes a plain rational p/r.
struct Surd {
  Rat p;
  Rat q;
  Int s;

  Surd() : p(0), q(0), s(0) {}
  explicit Surd(const Rat& rational) : p(rational), q(0), s(0) {}
  Surd(Rat p_, Rat q_, Int s_) : p(std::move(p_)), q(std::move(q_)), s(std::move(s_)) {
    if (s < 0) throw InvalidArgument("surd radicand must be non-negative");
    if (s == 0 || q == 0) {
      q = 0;
      s = 0;
      return;
    }
    // canonical form: pull square factors out of the radicand
    for (unsigned long d = 2; d <= 1000000; ++d) {
      unsigned long dd = d * d;
      if (mpz_cmp_ui(s.get_mpz_t(), dd) < 0) break;
      while (mpz_divisible_ui_p(s.get_mpz_t(), dd)) {
        s /= dd;
        q *= (long)d;
      }
    }
    if (s == 1) {
      p += q;
      q = 0;
      s = 0;
    }
  }

  bool is_rational() const { return s == 0; }
  double value() const;
  std::string str() const;
  bool operator==(const Surd& o) const { return p == o.p && q == o.q && s == o.s; }
};

double surd_value(const Int& s);

inline double Surd::value() const {
  return rat_to_double(p) + rat_to_double(q) * surd_value(s);
}

inline std::string Surd::str() const {
  if (is_rational()) return rat_to_string(p);
  std::string out = "(" + rat_to_string(p);
  out += (q < 0 ? " - " : " + ");
  Rat aq = q < 0 ? Rat(-q) : q;
  if (aq != 1) out += rat_to_string(aq) + "*";
  out += "sqrt(" + s.get_str() + "))";
  return out;
}

inline double surd_value(const Int& s) {
  // sqrt of a machine-sized non-negative integer
  return std::sqrt(s.get_d());
}

}  // namespace distspec

#include "vrw/modular_forms.hpp"

#include <cmath>
#include <sstream>

namespace vrw {

namespace {
const Rational kZero(0);
}

QExpansion QExpansion::zero(int known_order) {
  QExpansion f;
  f.x_ = 0;
  f.a_.assign(std::max(known_order, 0) + 1, Rational(0));
  return f;
}

QExpansion QExpansion::constant(const Rational& c, int order) {
  QExpansion f;
  f.x_ = 0;
  f.a_.assign(order + 1, Rational(0));
  f.a_[0] = c;
  f.canonicalize();
  return f;
}

QExpansion QExpansion::make(const Rational& leading_exponent,
                            std::vector<Rational> tail) {
  if (tail.empty()) tail.push_back(Rational(0));
  QExpansion f;
  f.x_ = leading_exponent;
  f.a_ = std::move(tail);
  f.canonicalize();
  return f;
}

void QExpansion::canonicalize() {
  size_t lead = 0;
  while (lead < a_.size() && a_[lead] == 0) ++lead;
  if (lead == a_.size()) {
    // Identically zero on the known range; keep x_ so that known_through()
    // still reports how far the cancellation is certified.
    return;
  }
  if (lead > 0) {
    a_.erase(a_.begin(), a_.begin() + lead);
    x_ += static_cast<long>(lead);
  }
}

const Rational& QExpansion::coeff(int n) const {
  if (n < 0 || n >= static_cast<int>(a_.size())) return kZero;
  return a_[n];
}

Rational QExpansion::coeff_at(const Rational& e) const {
  if (is_zero()) return Rational(0);
  Rational rel = e - x_;
  if (rel.get_den() != 1) return Rational(0);
  if (rel < 0) return Rational(0);
  if (rel > order())
    throw std::out_of_range("coefficient of q^" + rational_str(e) +
                            " beyond known order");
  return a_[rel.get_num().get_ui()];
}

bool QExpansion::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

QExpansion QExpansion::with_weight(std::optional<int> w) const {
  QExpansion f(*this);
  f.weight_ = w;
  return f;
}

QExpansion QExpansion::with_quasimodular(bool q) const {
  QExpansion f(*this);
  f.quasimodular_ = q;
  return f;
}

QExpansion QExpansion::add(const QExpansion& o) const {
  if (is_zero() || o.is_zero()) {
    const QExpansion& nz = is_zero() ? o : *this;
    const QExpansion& z = is_zero() ? *this : o;
    // Precision is capped by where the zero side is still known.
    QExpansion r = nz;
    if (!nz.is_zero()) {
      Rational budget = z.known_through() - nz.x_;
      if (budget < nz.order() && budget >= 0 && budget.get_den() == 1)
        r = nz.truncated(static_cast<int>(budget.get_num().get_si()));
    }
    std::optional<int> w =
        (weight_ && o.weight_ && *weight_ == *o.weight_) ? weight_ : std::nullopt;
    r.weight_ = w;
    r.quasimodular_ = quasimodular_ || o.quasimodular_;
    return r;
  }
  Rational diff = o.x_ - x_;
  if (diff.get_den() != 1)
    throw std::invalid_argument(
        "QExpansion add: leading exponents differ by a non-integer");
  const QExpansion& lo = (x_ <= o.x_) ? *this : o;
  const QExpansion& hi = (x_ <= o.x_) ? o : *this;
  long shift = std::abs(diff.get_num().get_si());
  Rational known = std::min(known_through(), o.known_through());
  Rational rel = known - lo.x_;
  long n = rel.get_num().get_si();  // relative known order (integral here)
  QExpansion r;
  r.x_ = lo.x_;
  r.a_.assign(n + 1, Rational(0));
  for (long i = 0; i <= n; ++i)
    r.a_[i] = lo.coeff(static_cast<int>(i)) +
              hi.coeff(static_cast<int>(i - shift));
  if (weight_ && o.weight_ && *weight_ == *o.weight_) r.weight_ = weight_;
  r.quasimodular_ = quasimodular_ || o.quasimodular_;
  r.canonicalize();
  return r;
}

QExpansion QExpansion::sub(const QExpansion& o) const { return add(o.neg()); }

QExpansion QExpansion::neg() const {
  QExpansion r(*this);
  for (auto& v : r.a_) v = -v;
  return r;
}

QExpansion QExpansion::scale(const Rational& c) const {
  QExpansion r(*this);
  for (auto& v : r.a_) v *= c;
  return r;
}

QExpansion QExpansion::mul(const QExpansion& o) const {
  int n = std::min(order(), o.order());
  QExpansion r;
  r.x_ = x_ + o.x_;
  r.a_.assign(n + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (a_[i] == 0) continue;
    for (int j = 0; i + j <= n && j <= o.order(); ++j)
      r.a_[i + j] += a_[i] * o.a_[j];
  }
  if (weight_ && o.weight_) r.weight_ = *weight_ + *o.weight_;
  r.quasimodular_ = quasimodular_ || o.quasimodular_;
  r.canonicalize();
  return r;
}

QExpansion QExpansion::invert() const {
  if (is_zero() || a_[0] == 0)
    throw std::domain_error("QExpansion invert: zero leading coefficient");
  QExpansion r;
  r.x_ = -x_;
  r.a_.assign(a_.size(), Rational(0));
  Rational inv0 = 1 / a_[0];
  r.a_[0] = inv0;
  for (int d = 1; d <= order(); ++d) {
    Rational s(0);
    for (int j = 1; j <= d; ++j) s += a_[j] * r.a_[d - j];
    r.a_[d] = -inv0 * s;
  }
  if (weight_) r.weight_ = -*weight_;
  r.quasimodular_ = quasimodular_;
  return r;
}

QExpansion QExpansion::pow(int e) const {
  if (e < 0) return invert().pow(-e);
  QExpansion r = constant(Rational(1), order());
  r.weight_ = weight_ ? std::optional<int>(0) : std::nullopt;
  for (int i = 0; i < e; ++i) r = r.mul(*this);
  return r;
}

QExpansion QExpansion::q_derivative() const {
  QExpansion r(*this);
  for (int n = 0; n <= order(); ++n) r.a_[n] *= (x_ + n);
  r.weight_.reset();
  r.canonicalize();
  return r;
}

QExpansion QExpansion::truncated(int n) const {
  if (n < 0) n = 0;
  QExpansion r(*this);
  if (n + 1 < static_cast<int>(r.a_.size())) r.a_.resize(n + 1);
  return r;
}

QExpansion QExpansion::stretched(int k) const {
  if (k < 1) throw std::invalid_argument("stretched: factor must be >= 1");
  QExpansion r;
  r.x_ = x_ * k;
  r.a_.assign(static_cast<size_t>(order()) * k + 1, Rational(0));
  for (int n = 0; n <= order(); ++n) r.a_[static_cast<size_t>(n) * k] = a_[n];
  r.weight_ = weight_;
  r.quasimodular_ = quasimodular_;
  return r;
}

std::string QExpansion::str() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  bool first = true;
  for (int n = 0; n <= order(); ++n) {
    if (a_[n] == 0) continue;
    Rational e = x_ + n;
    if (!first) os << " + ";
    os << rational_str(a_[n]);
    if (e != 0) os << "*q^" << (e.get_den() == 1 ? e.get_num().get_str()
                                                 : "(" + rational_str(e) + ")");
    first = false;
  }
  os << " + O(q^" << rational_str(known_through() + 1) << ")";
  return os.str();
}

bool QExpansion::operator==(const QExpansion& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (is_zero() != o.is_zero()) {
    // A zero expansion equals a nonzero one only if the nonzero part starts
    // beyond the zero side's known range.
    const QExpansion& nz = is_zero() ? o : *this;
    const QExpansion& z = is_zero() ? *this : o;
    return nz.x_ > z.known_through();
  }
  if (x_ != o.x_) return false;
  int n = std::min(order(), o.order());
  for (int i = 0; i <= n; ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

QExpansion eisenstein(int k, int n_terms) {
  if (k != 2 && k != 4 && k != 6)
    throw std::invalid_argument("eisenstein: k must be 2, 4, or 6");
  if (n_terms < 0) throw std::invalid_argument("eisenstein: negative order");
  int power = k - 1;
  long factor = (k == 2) ? -24 : (k == 4 ? 240 : -504);
  // Divisor-power sums by sieving.
  std::vector<mpz_class> sigma(n_terms + 1, 0);
  for (int d = 1; d <= n_terms; ++d) {
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), d, power);
    for (int m = d; m <= n_terms; m += d) sigma[m] += dp;
  }
  std::vector<Rational> tail(n_terms + 1);
  tail[0] = 1;
  for (int n = 1; n <= n_terms; ++n) tail[n] = Rational(factor * sigma[n]);
  QExpansion f = QExpansion::make(Rational(0), std::move(tail)).with_weight(k);
  if (k == 2) f = f.with_quasimodular(true);
  return f;
}

QExpansion eta_power(int r, int n_terms) {
  if (n_terms < 0) throw std::invalid_argument("eta_power: negative order");
  // prod (1-q^n) once, then the integer power.
  std::vector<Rational> p(n_terms + 1, Rational(0));
  p[0] = 1;
  for (int n = 1; n <= n_terms; ++n)
    for (int d = n_terms; d >= n; --d) p[d] -= p[d - n];
  QExpansion tail = QExpansion::make(Rational(0), std::move(p)).pow(r);
  std::vector<Rational> coeffs(tail.order() + 1);
  for (int n = 0; n <= tail.order(); ++n) coeffs[n] = tail.coeff(n);
  return QExpansion::make(frac(r, 24), std::move(coeffs));
}

QExpansion delta_cusp_form(int n_terms) {
  QExpansion e4 = eisenstein(4, n_terms);
  QExpansion e6 = eisenstein(6, n_terms);
  QExpansion d = e4.pow(3).sub(e6.pow(2)).scale(frac(1, 1728));
  return d.with_weight(12);
}

QExpansion j_invariant(int n_terms) {
  if (n_terms < -1) throw std::invalid_argument("j_invariant: order must be >= -1");
  int m = n_terms + 2;
  QExpansion e4 = eisenstein(4, m);
  QExpansion j = e4.pow(3).mul(delta_cusp_form(m).invert());
  // Leading exponent is -1, so q^{n_terms} sits at relative index n_terms + 1.
  return j.truncated(n_terms + 1).with_weight(0);
}

QExpansion serre_derivative(const QExpansion& f, int k) {
  QExpansion e2 = eisenstein(2, f.order());
  QExpansion r = f.q_derivative().sub(e2.mul(f).scale(frac(k, 12)));
  r = r.with_weight(k + 2);
  return r.with_quasimodular(f.quasimodular());
}

QExpansion iterate_D0(const QExpansion& f, int n) {
  if (n < 0) throw std::invalid_argument("iterate_D0: negative iteration count");
  QExpansion r = f;
  for (int i = 0; i < n; ++i) r = serre_derivative(r, 2 * i);
  return r;
}

EvalResult evaluate(const QExpansion& f, std::complex<double> tau, int terms) {
  if (tau.imag() <= 0)
    throw std::invalid_argument("evaluate: tau must lie in the upper half-plane");
  if (terms > f.order()) terms = f.order();
  const std::complex<double> two_pi_i(0.0, 2.0 * M_PI);
  std::complex<double> q = std::exp(two_pi_i * tau);
  // q^x via exp(2 pi i tau x): single-valued for rational x.
  double x = f.leading_exponent().get_d();
  std::complex<double> lead = std::exp(two_pi_i * tau * x);
  std::complex<double> sum(0.0, 0.0);
  std::complex<double> qn(1.0, 0.0);
  for (int n = 0; n <= terms; ++n) {
    sum += f.coeff(n).get_d() * qn;
    qn *= q;
  }
  EvalResult res;
  res.value = lead * sum;
  // Tail bound only when the last few coefficient magnitudes are
  // non-increasing.
  bool monotone = terms >= 1;
  for (int n = std::max(1, terms - 4); n <= terms && monotone; ++n)
    monotone = std::abs(f.coeff(n).get_d()) <= std::abs(f.coeff(n - 1).get_d());
  double absq = std::abs(q);
  if (monotone && absq < 1.0) {
    double aN = std::abs(f.coeff(terms).get_d());
    res.tail_bound = std::abs(lead) * aN * std::pow(absq, terms + 1) / (1.0 - absq);
  }
  return res;
}

}  // namespace vrw

#include "qmirror/mirrormap.hpp"

#include <stdexcept>

#include "qmirror/series333.hpp"

namespace qmirror {

QSeries phi333(const Rat& order) {
  QSeries r;
  r.prec = order;
  for (long k = 0;; ++k) {
    Rat e((6 * k + 3) * (6 * k + 3));
    if (e >= order) break;
    r.terms[e] = Rat((k % 2 == 0 ? -1 : 1) * (2 * k + 1));
  }
  return r;
}

QSeries psi333(const Rat& order) {
  QSeries r;
  r.prec = order;
  if (order > 1) r.terms[1] = -1;
  for (long k = 1;; ++k) {
    Rat lo((6 * k - 1) * (6 * k - 1));
    Rat hi((6 * k + 1) * (6 * k + 1));
    if (lo >= order) break;
    long sgn = (k % 2 == 1) ? 1 : -1;
    r.terms[lo] = Rat(-sgn * (6 * k - 1));
    if (hi < order) r.terms[hi] = Rat(sgn * (6 * k + 1));
  }
  normalize(r);
  return r;
}

QSeries w333_yz_series(const Rat& order) {
  QSeries r;
  r.prec = order;
  if (order > 1) r.terms[1] = -1;
  for (long k = 1;; ++k) {
    Rat lo((6 * k - 1) * (6 * k - 1));
    Rat hi((6 * k + 1) * (6 * k + 1));
    if (lo >= order) break;
    long sgn = (k % 2 == 1) ? 1 : -1;
    r.terms[lo] = Rat(-sgn * (2 * k - 1));
    if (hi < order) r.terms[hi] = Rat(sgn * (2 * k + 1));
  }
  normalize(r);
  return r;
}

QSeries w333_even_series(const Rat& order) {
  QSeries r;
  r.prec = order;
  for (long k = 1;; ++k) {
    Rat lo((6 * k - 1) * (6 * k - 1));
    Rat hi((6 * k + 1) * (6 * k + 1));
    if (lo >= order) break;
    long sgn = (k % 2 == 1) ? 1 : -1;
    r.terms[lo] = Rat(-sgn * 2 * k);
    if (hi < order) r.terms[hi] = Rat(sgn * 2 * k);
  }
  normalize(r);
  return r;
}

QSeries gamma333_series(const Rat& order) {
  QSeries r;
  r.prec = order;
  if (order > 1) r.terms[1] = -1;
  for (long k = 1;; ++k) {
    Rat lo((6 * k - 1) * (6 * k - 1));
    Rat hi((6 * k + 1) * (6 * k + 1));
    if (lo >= order) break;
    long sgn = (k % 2 == 1) ? 1 : -1;
    r.terms[lo] = Rat(sgn);
    if (hi < order) r.terms[hi] = Rat(sgn);
  }
  normalize(r);
  return r;
}

namespace {

MPoly<QSeries> monomial_with(const Expo& e, const QSeries& c) {
  return mpoly_monomial(xyz_vars(), e, c);
}

}  // namespace

MPoly<QSeries> w_x_333(const Rat& order) {
  return monomial_with({2, 0, 0}, phi333(order)) + monomial_with({0, 1, 1}, w333_yz_series(order));
}

MPoly<QSeries> w_y_333(const Rat& order) {
  return monomial_with({0, 2, 0}, neg(phi333(order))) +
         monomial_with({1, 0, 1}, w333_even_series(order));
}

MPoly<QSeries> w_z_333(const Rat& order) {
  return monomial_with({0, 0, 2}, phi333(order)) +
         monomial_with({1, 1, 0}, w333_even_series(order));
}

Potential closed_form_potential_333(const Rat& cutoff) {
  Potential W;
  W.abc = {3, 3, 3};
  W.cutoff = cutoff;
  QSeries phi = phi333(cutoff);
  QSeries psi = psi333(cutoff);
  W.poly = monomial_with({3, 0, 0}, phi) + monomial_with({0, 3, 0}, neg(phi)) +
           monomial_with({0, 0, 3}, phi) + monomial_with({1, 1, 1}, psi);
  W.lambda = with_prec(qs_zero(), cutoff);
  return W;
}

MirrorMapData compute_mirror_map(const Rat& order) {
  MirrorMapData mm;
  mm.order = order;
  QSeries eta9 = eta_quotient({{{1, 3}, {9, -3}}, rat(-1)}, order);
  mm.a_q = add(qs_const(rat(1)), scale(eta9, rat(1, 3)));
  mm.qcheck = scale(mm.a_q, rat(-3));
  mm.psi_over_phi = add(qs_const(rat(3)), eta_quotient({{{8, 3}, {72, -3}}, rat(-8)}, order));
  return mm;
}

SeriesCheck compare_series(std::string name, const QSeries& a, const QSeries& b, Rat order) {
  SeriesCheck c;
  c.name = std::move(name);
  if (a.prec) order = std::min(order, *a.prec);
  if (b.prec) order = std::min(order, *b.prec);
  c.order = order;
  c.mismatch_at = first_mismatch(a, b, order);
  c.pass = !c.mismatch_at.has_value();
  if (c.mismatch_at) {
    c.lhs = to_string(a.coeff(*c.mismatch_at));
    c.rhs = to_string(b.coeff(*c.mismatch_at));
    c.note = "first differing exponent " + c.mismatch_at->get_str();
  }
  return c;
}

std::vector<SeriesCheck> check_syz_equals_mirror(const Potential& W, const Rat& order) {
  if (W.abc != std::array<int, 3>{3, 3, 3})
    throw std::invalid_argument("check_syz_equals_mirror: needs the (3,3,3) signature");
  QSeries psi = W.monomial_series(1, 1, 1);
  QSeries phi = W.monomial_series(3, 0, 0);
  QSeries ratio = mul(psi, invert(phi));
  MirrorMapData mm = compute_mirror_map(order);
  QSeries from_qcheck = neg(substitute_power(mm.qcheck, rat(8)));
  std::vector<SeriesCheck> out;
  out.push_back(compare_series("psi/phi == 3 + eta quotient", ratio, mm.psi_over_phi, order));
  out.push_back(compare_series("psi/phi == -qcheck(q^8)", ratio, from_qcheck, order));
  out.push_back(
      compare_series("3 + eta quotient == -qcheck(q^8)", mm.psi_over_phi, from_qcheck, order));
  return out;
}

MPoly<QSeries> standard_form(const Potential& W) {
  Vars v = W.poly.vars;
  QSeries one = qs_const(rat(1));
  MPoly<QSeries> y = mpoly_var(v, var_index(v, "y"), one);
  MPoly<QSeries> flipped = substitute_linear(W.poly, {{"y", -y}});
  QSeries phi = W.monomial_series(3, 0, 0);
  if (phi.terms.empty()) throw std::invalid_argument("standard_form: no x^3 series");
  QSeries s = invert(nth_root(phi, 3));
  std::map<std::string, MPoly<QSeries>> subs;
  for (const auto& name : {"x", "y", "z"})
    subs[name] = mpoly_var(v, var_index(v, name), one) * s;
  return substitute_linear(flipped, subs);
}

SeriesCheck check_qcheck_integrality(const Rat& order) {
  MirrorMapData mm = compute_mirror_map(order);
  SeriesCheck c;
  c.name = "qcheck coefficients integral";
  c.order = order;
  c.pass = true;
  for (const auto& [e, co] : mm.qcheck.terms) {
    if (!is_integer(co)) {
      c.pass = false;
      c.mismatch_at = e;
      c.lhs = co.get_str();
      c.note = "non-integer coefficient at exponent " + e.get_str();
      break;
    }
  }
  return c;
}

std::vector<SeriesCheck> check_mirror_inverse(const Rat& order) {
  MirrorMapData mm = compute_mirror_map(order);
  QSeries g = compositional_inverse(mm.qcheck);
  std::vector<SeriesCheck> out;

  SeriesCheck shape;
  shape.name = "q(qcheck) exponents = -1 mod 3, descending";
  shape.order = order;
  shape.pass = true;
  for (const auto& [e, c] : g.terms) {
    Rat shifted = (e + 1) / 3;
    if (e >= 0 || !is_integer(shifted)) {
      shape.pass = false;
      shape.mismatch_at = e;
      shape.note = "offending exponent " + e.get_str();
      break;
    }
  }
  if (g.coeff(rat(-1)) != -1) {
    shape.pass = false;
    shape.note = "leading coefficient is " + g.coeff(rat(-1)).get_str() + ", expected -1";
  }
  out.push_back(shape);

  // Defining equation f(g(t)) = t, checked in u = 1/t: with A the flipped g,
  // sum of c_n A^n over the terms of qcheck must be u^-1.
  Rat depth = order + 2;
  QSeries A = flip_exponents(g, depth);
  QSeries lhs = qs_zero();
  for (const auto& [n, c] : mm.qcheck.terms) {
    if (!is_integer(n)) continue;
    lhs = add(lhs, scale(power(A, to_long(Int(n.get_num()))), c));
  }
  out.push_back(compare_series("qcheck(q(qcheck)) == identity", lhs, qs_monomial(rat(1), rat(-1)),
                               depth - 4));
  return out;
}

}  // namespace qmirror

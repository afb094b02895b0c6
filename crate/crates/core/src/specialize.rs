//! Principal and two-parameter specializations and the graded multiplicities
//! they compute, each with a closed product and a truncated-series route.

use crate::arith::{pow2, rint, series_of, Poly, Rat, RatFun, SPoly, Series2, TruncSeries};
use crate::kostka::delta;
use crate::partitions::{shifted_cells, shifted_hooks, Partition};
use crate::schurq::schur_q;
use crate::symfunc::{Basis, SymQ};
use crate::{Error, Result};
use num_traits::{One, Zero};
use serde_json::json;
use std::fmt;

pub const DEFAULT_ORDER: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultLabel {
    /// `f_λ`, multiplicity in `S^*V`
    FLower,
    /// `f^λ`, multiplicity in the coinvariant algebra
    FUpper,
    /// `f̂_λ(t, s)`, in `S^*V ⊗ ∧^*V`
    FHat,
    /// `f̃_λ(t, s)`, in `S^*V ⊗ S^*V`
    FTilde,
    DLower,
    DUpper,
    DHat,
    DTilde,
}

impl MultLabel {
    pub fn name(self) -> &'static str {
        match self {
            MultLabel::FLower => "f_lambda",
            MultLabel::FUpper => "f^lambda",
            MultLabel::FHat => "fhat",
            MultLabel::FTilde => "ftilde",
            MultLabel::DLower => "d_xi",
            MultLabel::DUpper => "d^xi",
            MultLabel::DHat => "dhat",
            MultLabel::DTilde => "dtilde",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum MultValue {
    Rational(RatFun),
    Polynomial(Poly),
    /// Polynomial in `s` with coefficients in `ℚ(t)`.
    Bivariate(SPoly),
    /// Truncated series; the orders travel with the value.
    Series(Series2),
}

impl fmt::Display for MultValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultValue::Rational(r) => write!(f, "{r}"),
            MultValue::Polynomial(p) => write!(f, "{p}"),
            MultValue::Bivariate(p) => write!(f, "{p}"),
            MultValue::Series(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedMult {
    pub label: MultLabel,
    pub value: MultValue,
}

impl GradedMult {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({ "label": self.label.name(), "value": self.value.to_string() });
        if let MultValue::Series(s) = &self.value {
            let (ot, os) = s.orders();
            v["order"] = json!({ "t": ot, "s": os });
        }
        v
    }
}

impl fmt::Display for GradedMult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.label.name(), self.value)
    }
}

fn hook_denominator(lambda: &Partition) -> Poly {
    let mut den = Poly::constant(Rat::one());
    for row in lambda.hooks() {
        for h in row {
            den = den.mul_ref(&Poly::one_minus_tpow(h));
        }
    }
    den
}

fn shifted_hook_denominator(xi: &Partition) -> Result<Poly> {
    let mut den = Poly::constant(Rat::one());
    for row in shifted_hooks(xi)? {
        for h in row {
            den = den.mul_ref(&Poly::one_minus_tpow(h));
        }
    }
    Ok(den)
}

fn coinvariant_factor(n: usize) -> Poly {
    (1..=n).fold(Poly::constant(Rat::one()), |acc, r| acc.mul_ref(&Poly::one_minus_tpow(r)))
}

fn rf(num: Poly, den: Poly) -> RatFun {
    RatFun::new(num, den).expect("nonzero denominator")
}

/// `s_λ(1, t, t², ...) = t^{n(λ)} / Π (1 - t^{h})`.
pub fn principal_schur(lambda: &Partition) -> RatFun {
    rf(Poly::tpow(lambda.n_stat()), hook_denominator(lambda))
}

/// `hs_λ(a t^•; b t^•) = t^{n(λ)} Π (a + b t^{c}) / Π (1 - t^{h})` for rational `a`, `b`.
pub fn hs_spec(lambda: &Partition, a: &Rat, b: &Rat) -> RatFun {
    // t^{n(λ)} Π_{c<0} t^{c} is a nonnegative power since c >= -(i-1)
    let mut shift = lambda.n_stat() as i64;
    let mut num = Poly::constant(Rat::one());
    for row in lambda.contents() {
        for c in row {
            if c < 0 {
                shift += c;
            }
            let fac = Poly::monomial(a.clone(), (-c).max(0) as usize).add_ref(&Poly::monomial(b.clone(), c.max(0) as usize));
            num = num.mul_ref(&fac);
        }
    }
    rf(num.shift(shift as usize), hook_denominator(lambda))
}

/// `hs_λ(t^•; s t^•)` as a polynomial in `s`.
pub fn hs_spec_s(lambda: &Partition) -> SPoly {
    let mut shift = lambda.n_stat() as i64;
    let mut num = SPoly::constant(RatFun::from_poly(Poly::constant(Rat::one())));
    for row in lambda.contents() {
        for c in row {
            if c < 0 {
                shift += c;
            }
            let fac = SPoly::linear(
                RatFun::from_poly(Poly::tpow((-c).max(0) as usize)),
                RatFun::from_poly(Poly::tpow(c.max(0) as usize)),
            );
            num = num.mul(&fac);
        }
    }
    num.scale_rf(&rf(Poly::tpow(shift as usize), hook_denominator(lambda)))
}

/// `Π (t^{i-1} + s t^{j-1}) / Π (1 - t^{h})`.
pub fn kp_bigraded_row_col(lambda: &Partition) -> SPoly {
    let mut num = SPoly::constant(RatFun::from_poly(Poly::constant(Rat::one())));
    for (i, j) in lambda.cells() {
        num = num.mul(&SPoly::linear(RatFun::from_poly(Poly::tpow(i)), RatFun::from_poly(Poly::tpow(j))));
    }
    num.scale_rf(&rf(Poly::constant(Rat::one()), hook_denominator(lambda)))
}

/// `Q_ξ(t^•) = t^{n(ξ)} Π_{ξ*} (1 + t^{c}) / (1 - t^{h*})`.
pub fn principal_q(xi: &Partition) -> Result<RatFun> {
    xi.require_strict()?;
    let mut num = Poly::tpow(xi.n_stat());
    for row in xi.parts() {
        for c in 0..*row {
            num = num.mul_ref(&Poly::constant(Rat::one()).add_ref(&Poly::tpow(c)));
        }
    }
    Ok(rf(num, shifted_hook_denominator(xi)?))
}

/// `Π_{ξ*} (t^{i-1} + t^{j-1}) / (1 - t^{h*})`.
pub fn principal_q_row_col(xi: &Partition) -> Result<RatFun> {
    xi.require_strict()?;
    let mut num = Poly::constant(Rat::one());
    for (i, j) in shifted_cells(xi) {
        num = num.mul_ref(&Poly::tpow(i).add_ref(&Poly::tpow(j)));
    }
    Ok(rf(num, shifted_hook_denominator(xi)?))
}

/// `(f_λ, f^λ)`: graded multiplicities in `S^*V` and in the coinvariant algebra.
pub fn fake_degree(lambda: &Partition) -> Result<(RatFun, Poly)> {
    let f = principal_schur(lambda);
    let upper = f
        .mul_ref(&RatFun::from_poly(coinvariant_factor(lambda.size())))
        .is_polynomial()
        .ok_or_else(|| Error::Inconsistent(format!("f^{lambda} is not a polynomial")))?;
    Ok((f, upper))
}

/// `f̂_λ(t, s) = hs_λ(t^•; s t^•)`.
pub fn kp_bigraded(lambda: &Partition) -> SPoly {
    hs_spec_s(lambda)
}

/// `2^{-(ℓ(ξ) - δ(ξ))/2}`.
pub fn spin_factor(xi: &Partition) -> Rat {
    pow2(-(((xi.len() - delta(xi)) / 2) as i64))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpinGraded {
    pub d_lower: RatFun,
    pub d_upper: Poly,
    pub d_hat: Series2,
    pub d_tilde: Series2,
}

impl SpinGraded {
    pub fn labelled(&self) -> Vec<GradedMult> {
        vec![
            GradedMult { label: MultLabel::DLower, value: MultValue::Rational(self.d_lower.clone()) },
            GradedMult { label: MultLabel::DUpper, value: MultValue::Polynomial(self.d_upper.clone()) },
            GradedMult { label: MultLabel::DHat, value: MultValue::Series(self.d_hat.clone()) },
            GradedMult { label: MultLabel::DTilde, value: MultValue::Series(self.d_tilde.clone()) },
        ]
    }
}

/// `d_ξ`, `d^ξ` in closed form and `d̂_ξ`, `d̃_ξ` as truncated series.
pub fn spin_graded(xi: &Partition, order: usize) -> Result<SpinGraded> {
    let k = RatFun::from_poly(Poly::constant(spin_factor(xi)));
    let d_lower = principal_q(xi)?.mul_ref(&k);
    let d_upper = d_lower
        .mul_ref(&RatFun::from_poly(coinvariant_factor(xi.size())))
        .is_polynomial()
        .ok_or_else(|| Error::Inconsistent(format!("d^{xi} is not a polynomial")))?;
    let q = schur_q(xi)?.into_sym();
    let d_hat = p_route(&q, order, order, |r| doubled_power_sum(r, order))?.scale(&spin_factor(xi));
    let d_tilde = p_route(&q, order, order, |r| grid_power_sum(r, order, order))?.scale(&spin_factor(xi));
    Ok(SpinGraded { d_lower, d_upper, d_hat, d_tilde })
}

/// Spin fake degree `d^ξ(t)`.
pub fn spin_fake_degree(xi: &Partition) -> Result<Poly> {
    let d = principal_q(xi)?.mul_ref(&RatFun::from_poly(Poly::constant(spin_factor(xi))));
    d.mul_ref(&RatFun::from_poly(coinvariant_factor(xi.size())))
        .is_polynomial()
        .ok_or_else(|| Error::Inconsistent(format!("d^{xi} is not a polynomial")))
}

/// `f̃_λ(t, s) = s_λ(t^• s^•)` truncated.
pub fn grsv2(lambda: &Partition, order_t: usize, order_s: usize) -> Result<Series2> {
    p_route(&SymQ::basis_elt(Basis::S, lambda), order_t, order_s, |r| grid_power_sum(r, order_t, order_s))
}

fn univariate(s: &TruncSeries, order_s: usize) -> Series2 {
    let mut out = Series2::zero(s.order(), order_s);
    for i in 0..=s.order() {
        out.add_at(i, 0, s.coeff(i));
    }
    out
}

/// `p_r(t^•) = 1/(1 - t^r)`.
fn principal_power_sum(r: usize, order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    for k in (0..=order).step_by(r) {
        s.add_at(k, &Rat::one());
    }
    s
}

/// `p_r` on `t^•`, `s t^•` together: `(1 + s^r)/(1 - t^r)`.
fn doubled_power_sum(r: usize, order: usize) -> Series2 {
    let mut out = Series2::zero(order, order);
    for k in (0..=order).step_by(r) {
        out.add_at(k, 0, &Rat::one());
        out.add_at(k, r, &Rat::one());
    }
    out
}

/// Super power sum `p_r(t^•; s t^•) = (1 - (-s)^r)/(1 - t^r)`.
fn super_power_sum(r: usize, order: usize) -> Series2 {
    let sign = if r % 2 == 0 { -Rat::one() } else { Rat::one() };
    let mut out = Series2::zero(order, order);
    for k in (0..=order).step_by(r) {
        out.add_at(k, 0, &Rat::one());
        out.add_at(k, r, &sign);
    }
    out
}

/// `p_r(t^• s^•) = 1/((1 - t^r)(1 - s^r))`.
fn grid_power_sum(r: usize, order_t: usize, order_s: usize) -> Series2 {
    let mut out = Series2::zero(order_t, order_s);
    for a in (0..=order_t).step_by(r) {
        for b in (0..=order_s).step_by(r) {
            out.add_at(a, b, &Rat::one());
        }
    }
    out
}

/// Substitutes `p_r -> pr(r)` into `f` written in power sums.
fn p_route(f: &SymQ, order_t: usize, order_s: usize, pr: impl Fn(usize) -> Series2) -> Result<Series2> {
    let fp = f.convert(Basis::P);
    let mut acc = Series2::zero(order_t, order_s);
    let mut cache: Vec<Option<Series2>> = vec![None; f.degree() + 1];
    for (mu, c) in fp.terms() {
        let mut term = Series2::one(order_t, order_s);
        for &r in mu.parts() {
            let p = cache[r].get_or_insert_with(|| pr(r)).clone();
            term = term.mul(&p);
        }
        acc = acc.add(&term.scale(c));
    }
    Ok(acc)
}

/// Series of `s_λ(t^•)` from the monomial expansion in `order + 1` variables.
pub fn principal_schur_series_oracle(lambda: &Partition, order: usize) -> TruncSeries {
    SymQ::basis_elt(Basis::S, lambda).expand(order + 1).principal_series(order)
}

/// Series of `Q_ξ(t^•)` from the monomial expansion in `order + 1` variables.
pub fn principal_q_series_oracle(xi: &Partition, order: usize) -> Result<TruncSeries> {
    Ok(schur_q(xi)?.into_sym().expand(order + 1).principal_series(order))
}

/// Series of `hs_λ(a t^•; b t^•)` via `p_r -> (a^r - (-b)^r)/(1 - t^r)`.
pub fn hs_spec_series_oracle(lambda: &Partition, a: &Rat, b: &Rat, order: usize) -> Result<TruncSeries> {
    let pr = |r: usize| {
        let k = num_traits::pow(a.clone(), r) - num_traits::pow(-b.clone(), r);
        univariate(&principal_power_sum(r, order).scale(&k), 0)
    };
    Ok(p_route(&SymQ::basis_elt(Basis::S, lambda), order, 0, pr)?.s_slice(0))
}

/// Series of `f̂_λ` via super power sums.
pub fn kp_series_oracle(lambda: &Partition, order: usize) -> Result<Series2> {
    p_route(&SymQ::basis_elt(Basis::S, lambda), order, order, |r| super_power_sum(r, order))
}

/// `f̂_λ` as the character sum `Σ_μ z_μ^{-1} χ^λ_μ Π (1 - (-s)^{μ_i})/(1 - t^{μ_i})` with
/// characters supplied by the caller.
pub fn kp_character_sum(n: usize, chi: impl Fn(&Partition) -> Rat) -> Result<SPoly> {
    let mut acc = SPoly::constant(RatFun::from_poly(Poly::default()));
    for mu in crate::partitions::enumerate(n, crate::partitions::Kind::All) {
        let c = chi(&mu) / Rat::from_integer(mu.z());
        if c.is_zero() {
            continue;
        }
        let mut term = SPoly::constant(RatFun::from_poly(Poly::constant(c)));
        for &r in mu.parts() {
            let g = RatFun::geometric(r);
            let mut coeffs = vec![g.clone()];
            coeffs.resize(r, RatFun::from_poly(Poly::default()));
            let sign = if r % 2 == 0 { -Rat::one() } else { Rat::one() };
            coeffs.push(g.mul_ref(&RatFun::from_poly(Poly::constant(sign))));
            term = term.mul(&SPoly::from_coeffs(coeffs));
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Series of `d_ξ(t)` from the character of `Cl_n ⊗ S_t V`: the `Q_ξ` component of
/// `Σ_{μ odd} z_μ^{-1} 2^{ℓ(μ)} Π (1 - t^{μ_i})^{-1} p_μ`.
pub fn d_series_from_characters(xi: &Partition, order: usize) -> Result<TruncSeries> {
    let q = schur_q(xi)?.into_sym();
    let n = xi.size();
    // <F, Q_ξ>_Γ with <p_μ, p_μ> = 2^{-ℓ} z_μ reduces to Σ_μ [p_μ]Q_ξ Π (1 - t^{μ_i})^{-1}
    let mut inner = TruncSeries::zero(order);
    for mu in crate::partitions::enumerate(n, crate::partitions::Kind::Odd) {
        let weight = pow2(mu.len() as i64) / Rat::from_integer(mu.z());
        let mut term = TruncSeries::one(order).scale(&weight);
        for &r in mu.parts() {
            term = term.mul(&principal_power_sum(r, order));
        }
        let pair = pow2(-(mu.len() as i64)) * Rat::from_integer(mu.z());
        inner = inner.add(&term.scale(&(q.coeff(&mu) * pair)));
    }
    // the Q_ξ coefficient is <F, Q_ξ>/2^ℓ and equals 2^{-(ℓ+δ)/2} d_ξ
    let e = (xi.len() + delta(xi)) as i64 / 2;
    Ok(inner.scale(&(pow2(-(xi.len() as i64)) * pow2(e))))
}

/// Compares a rational function with a series to the series order.
pub fn agrees(f: &RatFun, s: &TruncSeries) -> Result<bool> {
    Ok(&series_of(f, s.order())? == s)
}

/// Hook-formula dimension `n!/Π h`.
pub fn hook_dimension(lambda: &Partition) -> Rat {
    let mut r: Rat = (1..=lambda.size() as i64).map(rint).product();
    for row in lambda.hooks() {
        for h in row {
            r /= rint(h as i64);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_partition as pp;

    #[test]
    fn closed_examples() {
        assert_eq!(principal_schur(&pp("1,1").unwrap()).to_string(), "(t)/(1 - t - t^2 + t^3)");
        let one = Rat::one();
        let h = hs_spec(&pp("2,1").unwrap(), &one, &one);
        let want = rf(Poly::from_ints(&[2, 4, 2]), Poly::one_minus_tpow(3).mul_ref(&Poly::one_minus_tpow(1).pow(2)));
        assert_eq!(h, want);
        let q2 = principal_q(&pp("2").unwrap()).unwrap();
        assert_eq!(q2, rf(Poly::from_ints(&[2]), Poly::one_minus_tpow(1).pow(2)));
        let (_, f11) = fake_degree(&pp("1,1").unwrap()).unwrap();
        assert_eq!(f11, Poly::t());
        assert_eq!(spin_fake_degree(&pp("2").unwrap()).unwrap(), Poly::from_ints(&[2, 2]));
    }

    #[test]
    fn series_routes_small() {
        let l = pp("2,1").unwrap();
        assert!(agrees(&principal_schur(&l), &principal_schur_series_oracle(&l, 8)).unwrap());
        assert!(agrees(&principal_q(&l).unwrap(), &principal_q_series_oracle(&l, 8).unwrap()).unwrap());
        let d = principal_q(&l).unwrap().mul_ref(&RatFun::from_poly(Poly::constant(spin_factor(&l))));
        assert!(agrees(&d, &d_series_from_characters(&l, 8).unwrap()).unwrap());
        assert_eq!(kp_bigraded(&l).to_series(8, 8).unwrap(), kp_series_oracle(&l, 8).unwrap());
        assert_eq!(kp_bigraded(&l), kp_bigraded_row_col(&l));
    }

    #[test]
    fn grsv2_symmetric() {
        let g = grsv2(&pp("2,1").unwrap(), 6, 6).unwrap();
        for i in 0..=6 {
            for j in 0..=6 {
                assert_eq!(g.coeff(i, j), g.coeff(j, i));
            }
        }
    }
}

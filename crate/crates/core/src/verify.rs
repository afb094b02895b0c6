//! Verification suites shared by the command line and the test targets.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Witness of a failure, or a short summary when passing.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), checks: Vec::new() }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Records a check that passes when no witness was found.
    pub fn record_witness(&mut self, name: impl Into<String>, witness: Option<String>, ok_detail: impl Into<String>) {
        match witness {
            None => self.record(name, true, ok_detail),
            Some(w) => self.record(name, false, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{}/{}", other.name, c.name), ..c });
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}/{}: {}", if c.passed { "PASS" } else { "FAIL" }, self.name, c.name, c.detail)?;
        }
        Ok(())
    }
}

use crate::arith::{pow2, rint, series_of, Poly, RadExt, Rat, RatFun, TruncSeries};
use crate::kostka::{
    c_from_k, c_minus_from_spin_k, check_spin_hall_littlewood, delta, kostka_matrix, kostka_poly,
    kostka_via_hall_littlewood, q_weight_multiplicity, spin_kostka, spin_kostka_property_suite,
};
use crate::partitions::{double_partition, enumerate, shifted_cells, shifted_hooks, Kind, Partition, SignedPerm};
use crate::repn::{
    basic_spin_module, ch_map, ch_minus, char_table, character, cliff_mul, commutant_dimension, degree_formula,
    irreducible_multiplicity, permutation_module_check, seminormal_module, seminormal_x, sergeev_dimension_check,
    spin_character, verify_intertwiners, verify_relations, Algebra, CharKind, CliffMono,
};
use crate::schurq::{schur_q, schur_q_pfaffian_poly};
use crate::specialize as sp;
use crate::symfunc::{sym_eq, Basis, MultiPoly, SymQ};
use crate::tableaux::{
    g_closed_form, is_valid_weight, marked_shifted_count, standard_skew_shifted, standard_skew_shifted_count,
    tableau_to_weight, weight_to_tableau,
};
use crate::Result;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "qfunctions",
    "cauchy",
    "spinkostka",
    "kostka",
    "specialize",
    "seminormal",
    "characters",
    "sergeev",
    "bijection",
    "counting",
];

/// Runs a named suite at its default size, or every suite for `"all"`.
pub fn run_suite(name: &str) -> Result<SuiteReport> {
    run_suite_sized(name, None)
}

/// Like [`run_suite`], with `n` replacing the main size bound of the suite.
pub fn run_suite_sized(name: &str, n: Option<usize>) -> Result<SuiteReport> {
    let or = |d: usize| n.unwrap_or(d);
    match name {
        "qfunctions" => q_function_consistency(or(6)),
        "cauchy" => orthogonality_and_cauchy(or(7), or(4)),
        "spinkostka" => spin_kostka_suite(or(6)),
        "kostka" => kostka_oracles(or(5), or(4).min(4)),
        "specialize" => specialization_suite(or(6), 12),
        "seminormal" => seminormal_suite(or(5), or(4), 8),
        "characters" => character_suite(or(5)),
        "sergeev" => sergeev_suite(or(4)),
        "bijection" => bijection_suite(or(6), 3),
        "counting" => counting_suite(or(30), or(10), or(5).min(5)),
        "all" => {
            let mut all = SuiteReport::new("all");
            for s in SUITES {
                all.merge(run_suite_sized(s, n)?);
            }
            Ok(all)
        }
        other => Err(crate::Error::Parse(format!("unknown suite {other}; expected one of {SUITES:?} or all"))),
    }
}

fn first<T>(w: &mut Option<String>, ok: bool, f: impl FnOnce() -> T) where T: Into<String> {
    if !ok && w.is_none() {
        *w = Some(f().into());
    }
}

fn exps(mu: &Partition, nvars: usize) -> Vec<u32> {
    let mut e: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
    e.resize(nvars, 0);
    e
}

/// The recursion, the Pfaffian route and marked shifted tableaux give the same
/// monomial expansion of every `Q_ξ`, `|ξ| <= n_max`.
pub fn q_function_consistency(n_max: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("qfunctions");
    let mut w_pf = None;
    let mut w_tab = None;
    let mut count = 0;
    for n in 1..=n_max {
        for xi in enumerate(n, Kind::Strict) {
            count += 1;
            let rec = schur_q(&xi)?.into_sym().convert(Basis::M);
            let pf = schur_q_pfaffian_poly(&xi, n)?;
            let mut from_pf = SymQ::zero(n, Basis::M);
            let mut from_tab = SymQ::zero(n, Basis::M);
            for mu in enumerate(n, Kind::All) {
                from_pf.add_term(mu.clone(), pf.coeff(&exps(&mu, n)));
                from_tab.add_term(mu.clone(), rint(marked_shifted_count(&xi, mu.parts())? as i64));
            }
            first(&mut w_pf, sym_eq(&rec, &from_pf), || format!("Q_{xi}: recursion {rec} vs pfaffian {from_pf}"));
            first(&mut w_tab, sym_eq(&rec, &from_tab), || format!("Q_{xi}: recursion {rec} vs tableaux {from_tab}"));
        }
    }
    rep.record_witness("recursion=pfaffian", w_pf, format!("{count} strict partitions"));
    rep.record_witness("recursion=tableaux", w_tab, format!("{count} strict partitions"));
    Ok(rep)
}

/// Degree-`n` part of `Π_{i,j} F(x_i y_j)` with `F(u) = Σ_k a_k u^k`, in `nx + ny` variables.
fn cauchy_product(nx: usize, ny: usize, n: usize, a: impl Fn(usize) -> Rat) -> MultiPoly<Rat> {
    let nv = nx + ny;
    let mut terms: HashMap<Vec<u32>, Rat> = HashMap::new();
    terms.insert(vec![0; nv], Rat::one());
    for i in 0..nx {
        for j in 0..ny {
            let mut next: HashMap<Vec<u32>, Rat> = HashMap::new();
            for (e, c) in &terms {
                let deg: u32 = e[..nx].iter().sum();
                for k in 0..=(n as u32 - deg) {
                    let ak = a(k as usize);
                    if ak.is_zero() {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2[i] += k;
                    e2[nx + j] += k;
                    *next.entry(e2).or_insert_with(Rat::zero) += c * &ak;
                }
            }
            terms = next;
        }
    }
    let mut out = MultiPoly::zero(nv);
    for (e, c) in terms {
        if e[..nx].iter().sum::<u32>() == n as u32 {
            out.add_term(e, c);
        }
    }
    out
}

/// `<Q_λ, Q_μ> = 2^{ℓ(λ)} δ` for `|λ| <= n_ortho`, and the Cauchy identities in 3 + 3
/// variables for degrees up to `n_cauchy`.
pub fn orthogonality_and_cauchy(n_ortho: usize, n_cauchy: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("cauchy");
    let mut w = None;
    let mut pairs = 0;
    for n in 1..=n_ortho {
        let qs: Vec<(Partition, SymQ)> =
            enumerate(n, Kind::Strict).into_iter().map(|l| Ok((l.clone(), schur_q(&l)?.into_sym()))).collect::<Result<_>>()?;
        for (l, ql) in &qs {
            for (m, qm) in &qs {
                pairs += 1;
                let got = ql.gamma_inner_product(qm)?;
                let want = if l == m { pow2(l.len() as i64) } else { Rat::zero() };
                first(&mut w, got == want, || format!("<Q_{l}, Q_{m}> = {got}"));
            }
        }
    }
    rep.record_witness("orthogonality", w, format!("{pairs} pairs"));
    let (nx, ny) = (3, 3);
    let mut w_c = None;
    let mut w_pp = None;
    let mut w_g = None;
    for n in 1..=n_cauchy {
        let prod = cauchy_product(nx, ny, n, |_| Rat::one());
        let mut via_mh = MultiPoly::zero(nx + ny);
        let mut via_ss = MultiPoly::zero(nx + ny);
        for mu in enumerate(n, Kind::All) {
            let m = SymQ::basis_elt(Basis::M, &mu).expand(nx);
            let h = SymQ::basis_elt(Basis::H, &mu).expand(ny);
            via_mh = via_mh.add(&m.tensor(&h));
            let s = SymQ::basis_elt(Basis::S, &mu);
            via_ss = via_ss.add(&s.expand(nx).tensor(&s.expand(ny)));
        }
        first(&mut w_c, prod == via_mh && prod == via_ss, || format!("degree {n}"));
        let pp = cauchy_product(nx, ny, n, |k| if k == 0 { Rat::one() } else { rint(2) });
        let mut via_p = MultiPoly::zero(nx + ny);
        for a in enumerate(n, Kind::Odd) {
            let p = SymQ::basis_elt(Basis::P, &a);
            let k = pow2(a.len() as i64) / Rat::from_integer(a.z());
            via_p = via_p.add(&p.expand(nx).tensor(&p.expand(ny)).scale(&k));
        }
        first(&mut w_pp, pp == via_p, || format!("degree {n}"));
        let mut via_q = MultiPoly::zero(nx + ny);
        for l in enumerate(n, Kind::Strict) {
            let q = schur_q(&l)?.into_sym();
            via_q = via_q.add(&q.expand(nx).tensor(&q.expand(ny)).scale(&pow2(-(l.len() as i64))));
        }
        first(&mut w_g, pp == via_q, || format!("degree {n}"));
    }
    rep.record_witness("cauchy_mh_ss", w_c, format!("product = Σ m h = Σ s s, degrees <= {n_cauchy}"));
    rep.record_witness("cauchy_power_sums", w_pp, "odd power sum expansion");
    rep.record_witness("cauchy_gamma", w_g, "Σ 2^-ℓ Q Q");
    Ok(rep)
}

/// Spin Kostka properties for all `n <= n_max`, the transforms to `C` and `C⁻`, and the
/// expansion of `Q_ξ` in Hall–Littlewood functions in three variables.
pub fn spin_kostka_suite(n_max: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("spinkostka");
    for n in 1..=n_max {
        rep.merge(spin_kostka_property_suite(n)?);
    }
    let mut w_c = None;
    for n in 1..=n_max {
        for xi in enumerate(n, Kind::Strict) {
            for mu in enumerate(n, Kind::All) {
                if let Err(e) = c_minus_from_spin_k(&xi, &mu) {
                    first(&mut w_c, false, || e.to_string());
                }
            }
        }
        for l in enumerate(n, Kind::All) {
            for mu in enumerate(n, Kind::All) {
                if let Err(e) = c_from_k(&l, &mu) {
                    first(&mut w_c, false, || e.to_string());
                }
            }
        }
    }
    rep.record_witness("c_transforms", w_c, "C and C⁻ lie in Z+[t] with the 2-power cleared");
    let mut w_hl = None;
    for n in 1..=4.min(n_max) {
        for xi in enumerate(n, Kind::Strict) {
            first(&mut w_hl, check_spin_hall_littlewood(&xi, 3)?, || format!("Q_{xi} in 3 variables"));
        }
    }
    rep.record_witness("hall_littlewood_expansion", w_hl, "Q_ξ = Σ K⁻ P_μ in 3 variables, |ξ| <= 4");
    Ok(rep)
}

/// Charge against the symmetrization oracle (`|λ| <= n_hl`) and against q-weight
/// multiplicities (`|λ| <= n_qw`), plus unitriangularity of the Kostka matrices.
pub fn kostka_oracles(n_hl: usize, n_qw: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("kostka");
    let mut w = None;
    let mut cnt = 0;
    for n in 1..=n_hl {
        for l in enumerate(n, Kind::All) {
            let via = kostka_via_hall_littlewood(&l)?;
            for mu in enumerate(n, Kind::All) {
                cnt += 1;
                let a = kostka_poly(&l, mu.parts());
                let b = via.get(&mu).cloned().unwrap_or_default();
                first(&mut w, a == b, || format!("K_{l},{mu}: charge {a}, oracle {b}"));
            }
        }
    }
    rep.record_witness("charge=symmetrization", w, format!("{cnt} pairs"));
    let mut w = None;
    let mut cnt = 0;
    for n in 1..=n_qw {
        for l in enumerate(n, Kind::All) {
            for mu in enumerate(n, Kind::All) {
                cnt += 1;
                let a = kostka_poly(&l, mu.parts());
                let b = q_weight_multiplicity(&l, &mu, n)?;
                first(&mut w, a == b, || format!("K_{l},{mu}: charge {a}, q-weight {b}"));
            }
        }
    }
    rep.record_witness("charge=q_weight", w, format!("{cnt} pairs"));
    let mut w = None;
    for n in 1..=6 {
        let km = kostka_matrix(n);
        for l in &km.parts {
            for mu in &km.parts {
                let k = km.get(l, mu);
                let ok = if l == mu { k == Poly::constant(Rat::one()) } else { k.is_zero() || l.dominates(mu) };
                first(&mut w, ok, || format!("K_{l},{mu} = {k}"));
            }
        }
    }
    rep.record_witness("unitriangular", w, "n <= 6");
    Ok(rep)
}

fn spoly_series_eq(a: &crate::arith::SPoly, b: &crate::arith::Series2, order: usize) -> Result<bool> {
    Ok(&a.to_series(order, order)? == b)
}

/// Closed products against independent series for every shape of size `<= n_max`.
pub fn specialization_suite(n_max: usize, order: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("specialize");
    let one = Rat::one();
    let ab_pairs = [(one.clone(), Rat::zero()), (one.clone(), one.clone()), (rint(2), Rat::new((-1).into(), 3.into()))];
    let mut w = BTreeMap::<&str, Option<String>>::new();
    for k in ["schur", "hook_schur", "kp", "kp_forms", "grmult", "q", "q_forms", "spin", "dhat", "dtilde", "grsv2"] {
        w.insert(k, None);
    }
    for n in 1..=n_max {
        let mut regular = Rat::zero();
        for l in enumerate(n, Kind::All) {
            let ps = sp::principal_schur(&l);
            first(w.get_mut("schur").unwrap(), sp::agrees(&ps, &sp::principal_schur_series_oracle(&l, order))?, || format!("{l}"));
            for (a, b) in &ab_pairs {
                let ok = sp::agrees(&sp::hs_spec(&l, a, b), &sp::hs_spec_series_oracle(&l, a, b, order)?)?;
                first(w.get_mut("hook_schur").unwrap(), ok, || format!("{l} at a={a}, b={b}"));
            }
            let kp = sp::kp_bigraded(&l);
            first(w.get_mut("kp").unwrap(), spoly_series_eq(&kp, &sp::kp_series_oracle(&l, order)?, order)?, || format!("{l}"));
            first(w.get_mut("kp_forms").unwrap(), kp == sp::kp_bigraded_row_col(&l) && kp.eval_s(&Rat::zero()) == ps, || format!("{l}"));
            let (f, fu) = sp::fake_degree(&l)?;
            let series_fu = series_of(&f, order)?.mul(&TruncSeries::from_poly(&(1..=n).fold(Poly::constant(one.clone()), |a, r| a.mul_ref(&Poly::one_minus_tpow(r))), order));
            let ok = TruncSeries::from_poly(&fu, order) == series_fu && fu.eval(&one) == sp::hook_dimension(&l);
            first(w.get_mut("grmult").unwrap(), ok, || format!("f^{l} = {fu}"));
            regular += fu.eval(&one) * sp::hook_dimension(&l);
            let g = sp::grsv2(&l, order, order)?;
            let mut sym = true;
            for i in 0..=order {
                for j in 0..=order {
                    sym &= g.coeff(i, j) == g.coeff(j, i);
                }
            }
            sym &= g.s_slice(0) == series_of(&f, order)?;
            first(w.get_mut("grsv2").unwrap(), sym, || format!("{l}"));
        }
        let fact: Rat = (1..=n as i64).map(rint).product();
        first(w.get_mut("grmult").unwrap(), regular == fact, || format!("Σ f^λ(1) dim S^λ = {regular} at n = {n}"));
        for xi in enumerate(n, Kind::Strict) {
            let q = sp::principal_q(&xi)?;
            first(w.get_mut("q").unwrap(), sp::agrees(&q, &sp::principal_q_series_oracle(&xi, order)?)?, || format!("{xi}"));
            let sg = sp::spin_graded(&xi, order)?;
            let deg = pow2(n as i64 - ((xi.len() - delta(&xi)) / 2) as i64) * g_closed_form(&xi)?;
            let ok = sp::agrees(&sg.d_lower, &sp::d_series_from_characters(&xi, order)?)? && sg.d_upper.eval(&one) == deg;
            first(w.get_mut("spin").unwrap(), ok, || format!("d^{xi} = {}", sg.d_upper));
            let ok = sg.d_hat.s_slice(0) == series_of(&sg.d_lower, order)?;
            first(w.get_mut("dhat").unwrap(), ok, || format!("{xi}"));
            let mut sym = sg.d_tilde.s_slice(0) == series_of(&sg.d_lower, order)?;
            for i in 0..=order {
                for j in 0..=order {
                    sym &= sg.d_tilde.coeff(i, j) == sg.d_tilde.coeff(j, i);
                }
            }
            first(w.get_mut("dtilde").unwrap(), sym, || format!("{xi}"));
        }
    }
    for n in 1..=8 {
        for xi in enumerate(n, Kind::Strict) {
            first(w.get_mut("q_forms").unwrap(), sp::principal_q(&xi)? == sp::principal_q_row_col(&xi)?, || format!("{xi}"));
            let (ok1, ok2) = doubled_diagram_identities(&xi)?;
            first(w.get_mut("q_forms").unwrap(), ok1, || format!("hook product identity at {xi}"));
            first(w.get_mut("q_forms").unwrap(), ok2, || format!("row/column product identity at {xi}"));
        }
    }
    let names = [
        ("schur", "principal Schur closed form = expansion series"),
        ("hook_schur", "hook Schur specialization = power sum series"),
        ("kp", "bigraded closed form = super power sum series"),
        ("kp_forms", "both product forms agree; s = 0 gives f_λ"),
        ("grmult", "f^λ polynomial, f^λ(1) = hook dimension, regular at t = 1"),
        ("q", "principal Q closed form = expansion series"),
        ("q_forms", "both product forms and doubled-diagram identities, |ξ| <= 8"),
        ("spin", "d_ξ closed = character series, d^ξ(1) = degree"),
        ("dhat", "d̂(t, 0) = d_ξ"),
        ("dtilde", "d̃ symmetric, d̃(t, 0) = d_ξ"),
        ("grsv2", "f̃ symmetric, f̃(t, 0) = f_λ"),
    ];
    for (k, ok) in names {
        rep.record_witness(k, w[k].clone(), ok);
    }
    let mut w_chars = None;
    for n in 1..=4.min(n_max) {
        let table = char_table(n, CharKind::Symmetric)?;
        for chi in &table {
            let sum = sp::kp_character_sum(n, |mu| Rat::from_integer(chi.value(mu)))?;
            first(&mut w_chars, sum == sp::kp_bigraded(&chi.label), || format!("{}", chi.label));
        }
    }
    rep.record_witness("kp_characters", w_chars, "character sum with traced χ equals the closed form, n <= 4");
    let mut w_k = None;
    for n in 1..=5.min(n_max) {
        let col = Partition::new(vec![1; n])?;
        for xi in enumerate(n, Kind::Strict) {
            let d = sp::spin_fake_degree(&xi)?;
            let e = ((xi.len() - delta(&xi)) / 2) as i64;
            let want = d.reflect(col.n_stat()).map(|p| p.scale_ref(&pow2(e)));
            let k = spin_kostka(&xi, &col)?;
            first(&mut w_k, want.as_ref() == Some(&k), || format!("K⁻_{xi},(1^{n}) = {k}"));
        }
    }
    rep.record_witness("spin_kostka_column", w_k, "K⁻_ξ(1^n) from d^ξ, n <= 5");
    Ok(rep)
}

/// The hook and row/column product identities relating `ξ*` to the doubled diagram.
fn doubled_diagram_identities(xi: &Partition) -> Result<(bool, bool)> {
    let d = double_partition(xi)?;
    let one = Poly::constant(Rat::one());
    let mut lhs = one.clone();
    for row in d.hooks() {
        for h in row {
            lhs = lhs.mul_ref(&Poly::one_minus_tpow(h));
        }
    }
    let mut rhs = one.clone();
    for row in shifted_hooks(xi)? {
        for h in row {
            rhs = rhs.mul_ref(&Poly::one_minus_tpow(h).pow(2));
        }
    }
    for &p in xi.parts() {
        rhs = rhs.mul_ref(&one.add_ref(&Poly::tpow(p)));
    }
    let mut l2 = one.clone();
    for (i, j) in d.cells() {
        l2 = l2.mul_ref(&Poly::tpow(i).add_ref(&Poly::tpow(j)));
    }
    let mut r2 = one.clone();
    for (i, j) in shifted_cells(xi) {
        r2 = r2.mul_ref(&Poly::tpow(i).add_ref(&Poly::tpow(j)).pow(2));
    }
    for &p in xi.parts() {
        r2 = r2.mul_ref(&one.add_ref(&Poly::tpow(p)));
    }
    r2 = r2.scale_ref(&pow2(-(xi.len() as i64)));
    Ok((lhs == rhs, l2 == r2))
}

/// All skew shifted diagrams `ξ/ν` with `|ξ| <= xi_bound` and `1 <= |ξ/ν| <= size`.
pub fn skew_shapes(size: usize, xi_bound: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for m in 1..=xi_bound {
        for xi in enumerate(m, Kind::Strict) {
            for k in m.saturating_sub(size)..m {
                for nu in enumerate(k, Kind::Strict) {
                    if nu.len() <= xi.len() && (0..nu.len()).all(|i| nu.part(i) <= xi.part(i)) {
                        out.push((xi.clone(), nu));
                    }
                }
            }
        }
    }
    out
}

fn dimension_from_commutant(r: &crate::repn::Rep, gamma0: usize) -> Option<usize> {
    let comm = commutant_dimension(r)?;
    if comm != 1 << gamma0 {
        return None;
    }
    // End(Û) = M_m(End U) with End U of dimension 1 (type M) or 2 (type Q)
    let m = 1usize << (gamma0 / 2);
    Some(r.dim / m)
}

/// Relations, Jucys–Murphy images, intertwiners and dimensions of the seminormal modules.
pub fn seminormal_suite(n_finite: usize, affine_size: usize, xi_bound: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("seminormal");
    let e = Partition::empty();
    let mut fails: BTreeMap<String, String> = BTreeMap::new();
    let mut note = |k: &str, ok: bool, msg: String| {
        if !ok {
            fails.entry(k.to_string()).or_insert(msg);
        }
    };
    let mut finite_count = 0;
    for n in 1..=n_finite {
        for xi in enumerate(n, Kind::Strict) {
            finite_count += 1;
            let r = seminormal_module(&xi, &e, Algebra::Finite)?;
            let rel = verify_relations(&r, Algebra::Affine);
            note("finite_relations", rel.passed(), format!("{xi}: {}", rel.failures().map(|c| c.detail.clone()).collect::<Vec<_>>().join("; ")));
            let mut jm = true;
            for k in 1..=n {
                jm &= r.x(k) == &seminormal_x(&xi, &e, k)?;
            }
            note("jucys_murphy", jm, format!("{xi}"));
            let (dim_u, _) = irreducible_multiplicity(&xi, &e)?;
            let got = dimension_from_commutant(&r, xi.len());
            note("finite_dimension", got == Some(dim_u as usize), format!("{xi}: commutant gives {got:?}, formula {dim_u}"));
            note("degree_formula", degree_formula(&xi)? == dim_u.into(), format!("{xi}"));
        }
    }
    for n in 1..=6.max(n_finite) {
        for xi in enumerate(n, Kind::Strict) {
            let (dim_u, _) = irreducible_multiplicity(&xi, &e)?;
            note("degree_formula", degree_formula(&xi)? == dim_u.into(), format!("{xi}"));
        }
    }
    let shapes = skew_shapes(affine_size, xi_bound);
    for (xi, nu) in &shapes {
        let r = seminormal_module(xi, nu, Algebra::Affine)?;
        let label = r.label.clone();
        let rel = verify_relations(&r, Algebra::Affine);
        note("affine_relations", rel.passed(), format!("{label}: {}", rel.failures().map(|c| c.detail.clone()).collect::<Vec<_>>().join("; ")));
        if r.n >= 2 {
            let it = verify_intertwiners(&r);
            note("intertwiners", it.passed(), format!("{label}: {}", it.failures().map(|c| c.detail.clone()).collect::<Vec<_>>().join("; ")));
        }
        let gamma0 = xi.len() - nu.len();
        let (dim_u, mult) = irreducible_multiplicity(xi, nu)?;
        let g = standard_skew_shifted_count(xi, nu)? as usize;
        let got = dimension_from_commutant(&r, gamma0);
        note(
            "affine_dimension",
            got == Some(dim_u as usize) && r.dim == g << r.n && mult == 1 << (gamma0 / 2),
            format!("{label}: commutant gives {got:?}, formula {dim_u}"),
        );
        let basis = crate::repn::seminormal_basis(xi, nu)?;
        let diagonal_start = basis.contents.iter().all(|cv| cv[0] == 0);
        let x1_zero = r.x(1).is_zero();
        note("x1_vanishing", x1_zero == diagonal_start && (!nu.is_empty() || x1_zero), format!("{label}: x_1 = 0 is {x1_zero}"));
        let mut spectra_ok = true;
        for k in 1..=r.n {
            let mut want: BTreeSet<String> = BTreeSet::new();
            for cv in &basis.contents {
                let root = RadExt::sqrt_rat(&crate::repn::q_value(cv[k - 1]))?;
                want.insert(root.to_string());
                want.insert(root.neg().to_string());
            }
            let got: BTreeSet<String> = r.x(k).diagonal().iter().map(|v| v.to_string()).collect();
            spectra_ok &= r.x(k).is_diagonal() && got == want;
        }
        note("x_spectra", spectra_ok, format!("{label}"));
    }
    let big = seminormal_module(&Partition::new(vec![4, 2])?, &Partition::new(vec![1])?, Algebra::Affine)?;
    let it = verify_intertwiners(&big);
    note("intertwiners", it.passed(), "(4,2)/(1)".to_string());
    let keys = [
        ("finite_relations", format!("{finite_count} straight shapes, n <= {n_finite}")),
        ("jucys_murphy", "J_k equals the seminormal x_k".to_string()),
        ("finite_dimension", "commutant 2^ℓ, dim U from it".to_string()),
        ("degree_formula", "degree formula = dim U^ξ, n <= 6".to_string()),
        ("affine_relations", format!("{} skew shapes of size <= {affine_size}", shapes.len())),
        ("intertwiners", "square, x, c and braid identities".to_string()),
        ("affine_dimension", "dim U^{ξ/ν} from the commutant".to_string()),
        ("x1_vanishing", "x_1 = 0 when ν = ∅, and exactly when every T_1 is on the diagonal".to_string()),
        ("x_spectra", "x_k spectra are ±√q(c(T_k))".to_string()),
    ];
    for (k, ok) in keys {
        match fails.get(k) {
            None => rep.record(k, true, ok),
            Some(m) => rep.record(k, false, m.clone()),
        }
    }
    Ok(rep)
}

/// Traced characters against power-sum coefficients of `Q_ξ`, vanishing off odd classes,
/// inner products, the basic spin character and the characteristic maps.
pub fn character_suite(n_max: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("characters");
    let (mut w_q, mut w_van, mut w_in, mut w_basic, mut w_ch, mut w_sn, mut w_iso) = (None, None, None, None, None, None, None);
    for n in 1..=n_max {
        let strict = enumerate(n, Kind::Strict);
        let mut zetas = Vec::new();
        for xi in &strict {
            let z = spin_character(xi)?;
            let q = schur_q(xi)?.into_sym();
            let f = pow2(-(((xi.len() - delta(xi)) / 2) as i64));
            for (alpha, v) in &z.values {
                let want = &f * Rat::from_integer(alpha.z()) * q.coeff(alpha);
                first(&mut w_q, Rat::from_integer(v.clone()) == want, || format!("ζ^{xi} at {alpha} = {v}, expected {want}"));
            }
            let r = seminormal_module(xi, &Partition::empty(), Algebra::Finite)?;
            for alpha in enumerate(n, Kind::All).into_iter().filter(|a| !a.all_odd()) {
                let tr = character(&r, &alpha)?;
                first(&mut w_van, tr.is_zero(), || format!("trace at {alpha} on {xi} is {tr}"));
            }
            let chm = ch_minus(&z)?;
            first(&mut w_ch, chm == schur_q(xi)?.scale(&f), || format!("ch⁻(ζ^{xi})"));
            zetas.push((xi.clone(), z, chm));
        }
        for (l, zl, cl) in &zetas {
            for (m, zm, cm) in &zetas {
                let mut s = Rat::zero();
                for alpha in enumerate(n, Kind::Odd) {
                    s += Rat::from_integer(zl.value(&alpha) * zm.value(&alpha)) * pow2(-(alpha.len() as i64)) / Rat::from_integer(alpha.z());
                }
                let want = if l != m { Rat::zero() } else if l.len() % 2 == 0 { Rat::one() } else { rint(2) };
                first(&mut w_in, s == want, || format!("<ζ^{l}, ζ^{m}> = {s}"));
                let g = cl.inner(cm);
                first(&mut w_iso, g == s, || format!("<ch⁻ζ^{l}, ch⁻ζ^{m}> = {g}, class sum {s}"));
            }
        }
        let b = basic_spin_module(n)?;
        for alpha in enumerate(n, Kind::All) {
            let tr = character(&b, &alpha)?;
            let want = if alpha.all_odd() { pow2(alpha.len() as i64) } else { Rat::zero() };
            first(&mut w_basic, tr == want, || format!("basic spin at {alpha} = {tr}"));
        }
        let table = char_table(n, CharKind::Symmetric)?;
        for chi in &table {
            first(&mut w_sn, sym_eq(&ch_map(chi), &SymQ::basis_elt(Basis::S, &chi.label)), || format!("ch(χ^{})", chi.label));
            for psi in &table {
                let mut s = Rat::zero();
                for mu in enumerate(n, Kind::All) {
                    s += Rat::from_integer(chi.value(&mu) * psi.value(&mu)) / Rat::from_integer(mu.z());
                }
                let want = if chi.label == psi.label { Rat::one() } else { Rat::zero() };
                first(&mut w_sn, s == want, || format!("<χ^{}, χ^{}> = {s}", chi.label, psi.label));
                let hall = ch_map(chi).inner_product(&ch_map(psi));
                first(&mut w_sn, hall == s, || format!("ch not isometric at {}, {}", chi.label, psi.label));
            }
        }
    }
    rep.record_witness("trace=power_sum_coefficient", w_q, format!("n <= {n_max}"));
    rep.record_witness("vanishing_off_odd", w_van, "traces vanish at classes with an even part");
    rep.record_witness("inner_products", w_in, "1 for ℓ even, 2 for ℓ odd, 0 off the diagonal");
    rep.record_witness("basic_spin", w_basic, "2^ℓ(α) on odd classes, 0 elsewhere");
    rep.record_witness("ch_minus", w_ch, "ch⁻(ζ^ξ) = 2^{-(ℓ-δ)/2} Q_ξ");
    rep.record_witness("ch_minus_isometry", w_iso, "Γ form on ch⁻ images equals the class sum");
    rep.record_witness("symmetric_group", w_sn, "ch(χ^λ) = s_λ, orthogonality, isometry");
    Ok(rep)
}

/// The super dimension identity for `1 <= n, d <= max`, and the permutation module expansion.
pub fn sergeev_suite(max: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sergeev");
    let mut w = None;
    for n in 1..=max {
        for d in 1..=max {
            first(&mut w, sergeev_dimension_check(n, d)?, || format!("n = {n}, d = {d}"));
        }
    }
    rep.record_witness("dimension_identity", w, format!("1 <= n, d <= {max}"));
    let mut w = None;
    for n in 1..=max.min(5) {
        for mu in enumerate(n, Kind::All) {
            first(&mut w, permutation_module_check(&mu)?, || format!("q_{mu}"));
        }
    }
    rep.record_witness("permutation_modules", w, "q_μ from traced spin characters");
    Ok(rep)
}

/// Content vectors of standard skew shifted tableaux with `n` cells and contents `<= max_c`,
/// collected from every shape that can carry them.
fn content_vectors(n: usize, max_c: usize) -> Result<HashSet<Vec<usize>>> {
    let mut out = HashSet::new();
    // contents j - i <= max_c force ξ_i <= max_c + 1
    let cap = max_c + 1;
    let xis: Vec<Partition> = (0u32..1 << cap)
        .map(|m| Partition::from_unsorted((1..=cap).filter(|p| m >> (p - 1) & 1 == 1).collect()))
        .collect();
    for xi in &xis {
        for nu in &xis {
            if xi.size() < nu.size() + n || xi.size() != nu.size() + n {
                continue;
            }
            if nu.len() > xi.len() || (0..nu.len()).any(|i| nu.part(i) > xi.part(i)) {
                continue;
            }
            for t in standard_skew_shifted(xi, nu)? {
                let cv = t.content_vector();
                if cv.iter().all(|&c| c <= max_c) {
                    out.insert(cv);
                }
            }
        }
    }
    Ok(out)
}

/// The weight/tableau bijection and the characterization of valid weights.
pub fn bijection_suite(n_max: usize, max_c: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("bijection");
    let (mut w_char, mut w_inv, mut w_back) = (None, None, None);
    let mut valid = 0;
    for n in 1..=n_max {
        let cvs = content_vectors(n, max_c)?;
        let total = (max_c + 1).pow(n as u32);
        for code in 0..total {
            let mut w = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                w.push(c % (max_c + 1));
                c /= max_c + 1;
            }
            let v = is_valid_weight(&w);
            first(&mut w_char, v == cvs.contains(&w), || format!("{w:?}: valid = {v}"));
            if v {
                valid += 1;
                match weight_to_tableau(&w) {
                    Ok(t) => {
                        let ok = tableau_to_weight(&t) == w && t.is_standard();
                        first(&mut w_inv, ok, || format!("{w:?}"));
                    }
                    Err(e) => first(&mut w_inv, false, || format!("{w:?}: {e}")),
                }
            }
        }
    }
    for (xi, nu) in skew_shapes(4, 8) {
        for t in standard_skew_shifted(&xi, &nu)? {
            let w = tableau_to_weight(&t);
            let back = weight_to_tableau(&w)?;
            first(&mut w_back, back == t.normalize()?, || format!("{}/{}: {:?}", xi, nu, t.rows));
        }
    }
    rep.record_witness("validity=content_vectors", w_char, format!("alphabet 0..={max_c}, n <= {n_max}"));
    rep.record_witness("weight_roundtrip", w_inv, format!("{valid} valid weights"));
    rep.record_witness("tableau_roundtrip", w_back, "tableaux of skew shapes of size <= 4");
    let t = weight_to_tableau(&[1, 2, 0, 1, 0])?;
    let ok = t.outer.parts() == [3, 2, 1] && t.inner.parts() == [1] && t.rows == vec![vec![1, 2], vec![3, 4], vec![5]];
    rep.record("example", ok, format!("(1,2,0,1,0) -> {}/{} rows {:?}", t.outer, t.inner, t.rows));
    Ok(rep)
}

/// An element `±c^I σ` of the double cover of `B_n` inside `Cl_n ⋊ S_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Cover {
    neg: bool,
    mask: u64,
    perm: Vec<u8>,
}

impl Cover {
    fn mul(&self, o: &Cover) -> Cover {
        // σ c^J σ^{-1} = product of c_{σ(j)} in increasing j
        let mut moved = CliffMono::one();
        for j in 0..self.perm.len() {
            if o.mask >> j & 1 == 1 {
                moved = cliff_mul(moved, CliffMono::gen(self.perm[j] as usize + 1));
            }
        }
        let head = cliff_mul(CliffMono { negative: self.neg ^ o.neg, support: self.mask }, moved);
        let perm = o.perm.iter().map(|&t| self.perm[t as usize]).collect();
        Cover { neg: head.negative, mask: head.support, perm }
    }
}

/// Classifies every class of `B_n` as split or not by brute force in the double cover and
/// compares with the closed criterion. Returns `(classes, even split, odd split)`.
pub fn split_class_census(n: usize) -> Result<(usize, usize, usize, Option<String>)> {
    let id: Vec<u8> = (0..n as u8).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(Cover { neg: false, mask: 1 << i, perm: id.clone() });
    }
    for k in 0..n.saturating_sub(1) {
        let mut p = id.clone();
        p.swap(k, k + 1);
        gens.push(Cover { neg: false, mask: 0, perm: p });
    }
    let mut class_of: HashMap<Cover, usize> = HashMap::new();
    let mut classes: Vec<Vec<Cover>> = Vec::new();
    let perms = crate::symfunc::all_permutations(n);
    for p in &perms {
        for mask in 0..1u64 << n {
            for neg in [false, true] {
                let g = Cover { neg, mask, perm: p.iter().map(|&x| x as u8).collect() };
                if class_of.contains_key(&g) {
                    continue;
                }
                let c = classes.len();
                let mut orbit = vec![g.clone()];
                let mut queue = VecDeque::from([g.clone()]);
                class_of.insert(g, c);
                while let Some(h) = queue.pop_front() {
                    for s in &gens {
                        // generators are involutions up to sign: s^{-1} = s for c_i and s_k
                        let conj = s.mul(&h).mul(s);
                        if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(conj.clone()) {
                            e.insert(c);
                            orbit.push(conj.clone());
                            queue.push_back(conj);
                        }
                    }
                }
                classes.push(orbit);
            }
        }
    }
    // B_n classes by type; split iff g and zg are not conjugate
    let mut by_type: BTreeMap<(Partition, Partition, usize), bool> = BTreeMap::new();
    for (g, &c) in &class_of {
        let signs: Vec<bool> = (0..n).map(|i| g.mask >> i & 1 == 1).collect();
        let sp = SignedPerm::new(g.perm.iter().map(|&x| x as usize).collect(), signs)?;
        let (pos, neg) = sp.class_type();
        let zg = Cover { neg: !g.neg, ..g.clone() };
        let split = class_of[&zg] != c;
        let e = by_type.entry((pos, neg, sp.parity())).or_insert(split);
        if *e != split {
            return Ok((0, 0, 0, Some("split status differs inside one class".into())));
        }
    }
    let mut witness = None;
    let (mut even, mut odd) = (0, 0);
    for ((pos, neg, parity), split) in &by_type {
        if *split != crate::partitions::is_split(pos, neg) && witness.is_none() {
            witness = Some(format!("class ({pos}, {neg}): brute force split = {split}"));
        }
        if *split {
            if *parity == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    Ok((by_type.len(), even, odd, witness))
}

/// `|SP_n| = |OP_n|`, the closed formula for `g_ξ`, and the split class census.
pub fn counting_suite(n_parts: usize, n_g: usize, n_census: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("counting");
    // independent route: coefficients of Π(1 + t^k) and Π 1/(1 - t^{2k-1})
    let order = n_parts;
    let mut a = TruncSeries::one(order);
    let mut b = TruncSeries::one(order);
    for k in 1..=order {
        a = a.mul(&TruncSeries::from_poly(&Poly::constant(Rat::one()).add_ref(&Poly::tpow(k)), order));
        if k % 2 == 1 {
            b = b.mul(&series_of(&RatFun::geometric(k), order)?);
        }
    }
    let mut w = None;
    for n in 0..=n_parts {
        let s = enumerate(n, Kind::Strict).len();
        let o = enumerate(n, Kind::Odd).len();
        let ok = s == o && rint(s as i64) == *a.coeff(n) && rint(o as i64) == *b.coeff(n);
        first(&mut w, ok, || format!("n = {n}: strict {s}, odd {o}"));
    }
    rep.record_witness("strict=odd", w, format!("n <= {n_parts}"));
    let mut w = None;
    for n in 1..=n_g {
        for xi in enumerate(n, Kind::Strict) {
            let g = g_closed_form(&xi)?;
            let c = standard_skew_shifted_count(&xi, &Partition::empty())?;
            first(&mut w, g == rint(c as i64), || format!("g_{xi}: formula {g}, count {c}"));
        }
    }
    rep.record_witness("g_formula", w, format!("n <= {n_g}"));
    for n in 1..=n_census {
        let (classes, even, odd, witness) = split_class_census(n)?;
        let strict = enumerate(n, Kind::Strict);
        let odd_len = strict.iter().filter(|x| x.len() % 2 == 1).count();
        let ok = witness.is_none() && even == enumerate(n, Kind::Odd).len() && odd == odd_len;
        rep.record(
            format!("split_classes(n={n})"),
            ok,
            witness.unwrap_or_else(|| format!("{classes} classes, {even} even split, {odd} odd split")),
        );
    }
    Ok(rep)
}


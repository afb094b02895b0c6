use num_traits::{One, Zero};
use proptest::prelude::*;
use spinq::arith::{rad_inv, rat, rint, series_of, Poly, RadExt, Rat, RatFun, TruncSeries};
use spinq::kostka::kostka_poly;
use spinq::partitions::{enumerate, shifted_hooks, Kind, Partition};
use spinq::schurq::{g_coeffs, q_product, schur_q};
use spinq::symfunc::{sym_eq, Basis, SymQ};
use spinq::tableaux::{marked_shifted_count, ssyt};

const RADICANDS: [u64; 8] = [1, 2, 3, 5, 6, 10, 15, 30];

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn radext() -> impl Strategy<Value = RadExt> {
    prop::collection::vec((0..RADICANDS.len(), small_rat()), 0..4).prop_map(|terms| {
        let mut x = RadExt::zero();
        for (i, c) in terms {
            x.add_assign(&RadExt::sqrt_int(RADICANDS[i] as i64).unwrap().scale(&c));
        }
        x
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..6).prop_map(Poly::from_coeffs)
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max, 0..=max).prop_map(move |v| {
        let mut out = Vec::new();
        let mut total = 0;
        for p in v {
            if total + p <= max {
                total += p;
                out.push(p);
            }
        }
        Partition::from_unsorted(out)
    })
}

fn strict(max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1usize..=max_part, 0..=max_part).prop_map(|s| Partition::from_unsorted(s.into_iter().collect()))
}

fn sym(degree: usize) -> impl Strategy<Value = SymQ> {
    let parts = enumerate(degree, Kind::All);
    let k = parts.len();
    prop::collection::vec(small_rat(), k).prop_map(move |cs| {
        let mut f = SymQ::zero(degree, Basis::M);
        for (l, c) in parts.iter().zip(cs) {
            f.add_term(l.clone(), c);
        }
        f
    })
}

fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(vec![Basis::M, Basis::H, Basis::E, Basis::P, Basis::S])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn radext_ring_axioms(a in radext(), b in radext(), c in radext()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn radext_inverse(a in radext()) {
        prop_assume!(!a.is_zero());
        let i = rad_inv(&a).unwrap();
        prop_assert_eq!(a.mul(&i), RadExt::one());
        prop_assert_eq!(i.mul(&a), RadExt::one());
    }

    #[test]
    fn exact_cancellation(a in small_rat(), b in small_rat(), p in poly(), q in poly()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
        prop_assert_eq!(p.add_ref(&q).sub_ref(&q), p);
    }

    #[test]
    fn series_is_multiplicative(n1 in poly(), d1 in poly(), n2 in poly(), d2 in poly()) {
        let unit = |d: Poly| d.shift(1).add_ref(&Poly::constant(Rat::one()));
        let f = RatFun::new(n1, unit(d1)).unwrap();
        let g = RatFun::new(n2, unit(d2)).unwrap();
        let order = 10;
        let lhs = series_of(&f.mul_ref(&g), order).unwrap();
        let rhs = series_of(&f, order).unwrap().mul(&series_of(&g, order).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_round_trip(l in partition(12)) {
        let (a, b) = l.frobenius();
        prop_assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), l);
    }

    #[test]
    fn hook_sum(l in partition(12)) {
        let s: usize = l.hooks().iter().flatten().sum();
        prop_assert_eq!(s, l.n_stat() + l.conjugate().n_stat() + l.size());
    }

    #[test]
    fn shifted_hook_rows(xi in strict(5)) {
        prop_assume!(xi.size() <= 10);
        let hooks = shifted_hooks(&xi).unwrap();
        let p = xi.parts();
        for (i, row) in hooks.iter().enumerate() {
            let mut got = row.clone();
            got.sort();
            let mut want: Vec<usize> = (1..=p[i]).collect();
            want.extend(p[i + 1..].iter().map(|&k| p[i] + k));
            for &k in &p[i + 1..] {
                let pos = want.iter().position(|&h| h == p[i] - k).unwrap();
                want.remove(pos);
            }
            want.sort();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn marked_counts_are_symmetric(xi in strict(4), perm in any::<u64>()) {
        prop_assume!(!xi.is_empty() && xi.size() <= 6);
        for mu in enumerate(xi.size(), Kind::All) {
            let mut comp = mu.parts().to_vec();
            comp.resize(mu.len() + 1, 0);
            let k = comp.len();
            for i in 0..k {
                comp.swap(i, (perm as usize >> (2 * i)) % k);
            }
            prop_assert_eq!(marked_shifted_count(&xi, &comp).unwrap(), marked_shifted_count(&xi, mu.parts()).unwrap());
        }
    }

    #[test]
    fn charge_degree_and_positivity(l in partition(6), idx in 0usize..64) {
        prop_assume!(!l.is_empty());
        let mus = enumerate(l.size(), Kind::All);
        let mu = &mus[idx % mus.len()];
        let k = kostka_poly(&l, mu.parts());
        prop_assert!(k.has_nonneg_integer_coeffs());
        prop_assert_eq!(k.eval(&Rat::one()), rint(ssyt(&l, mu.parts()).len() as i64));
        if !k.is_zero() {
            prop_assert_eq!(k.degree(), Some(mu.n_stat() - l.n_stat()));
        }
    }

    #[test]
    fn conversions_round_trip(f in (1usize..=6).prop_flat_map(sym), b1 in basis(), b2 in basis()) {
        let g = f.convert(b1).convert(b2).convert(Basis::M);
        prop_assert!(sym_eq(&f, &g));
    }

    #[test]
    fn phi_is_multiplicative(f in (1usize..=2).prop_flat_map(sym), g in (1usize..=2).prop_flat_map(sym)) {
        prop_assert!(sym_eq(&f.mul(&g).phi(), &f.phi().mul(&g.phi())));
    }

    #[test]
    fn expansion_is_symmetric(f in (1usize..=4).prop_flat_map(sym), swap in 0usize..3) {
        let nv = 4;
        let e = f.expand(nv);
        let mut swapped = spinq::symfunc::MultiPoly::zero(nv);
        for (ex, c) in e.terms() {
            let mut ex = ex.clone();
            ex.swap(swap, swap + 1);
            swapped.add_term(ex, c.clone());
        }
        prop_assert_eq!(swapped, e);
    }
}

#[test]
fn schur_gram_matrix_is_identity() {
    for n in 1..=6 {
        for a in enumerate(n, Kind::All) {
            for b in enumerate(n, Kind::All) {
                let g = SymQ::basis_elt(Basis::S, &a).inner_product(&SymQ::basis_elt(Basis::S, &b));
                assert_eq!(g, if a == b { Rat::one() } else { Rat::zero() });
            }
        }
    }
}

#[test]
fn cauchy_in_three_plus_three_variables_to_degree_five() {
    for n in 1..=5 {
        let mut mh = spinq::symfunc::MultiPoly::zero(6);
        let mut ss = spinq::symfunc::MultiPoly::zero(6);
        for mu in enumerate(n, Kind::All) {
            mh = mh.add(&SymQ::basis_elt(Basis::M, &mu).expand(3).tensor(&SymQ::basis_elt(Basis::H, &mu).expand(3)));
            let s = SymQ::basis_elt(Basis::S, &mu);
            ss = ss.add(&s.expand(3).tensor(&s.expand(3)));
        }
        assert_eq!(mh, ss, "degree {n}");
    }
}

/// Exact solution of `Σ_j x_j a_j = b` for columns `a_j`, or None if inconsistent.
fn solve(cols: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let (m, k) = (b.len(), cols.len());
    let mut rows: Vec<Vec<Rat>> = (0..m).map(|i| cols.iter().map(|c| c[i].clone()).chain([b[i].clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rat::one() / &rows[r][c];
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                rows[i] = rows[i].iter().zip(&rows[r]).map(|(x, y)| x - &f * y).collect();
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[k].is_zero()) || pivots.len() < k {
        return None;
    }
    let mut x = vec![Rat::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][k].clone();
    }
    Some(x)
}

#[test]
fn q_and_schur_q_bases_are_unitriangular_over_z() {
    for n in 1..=6 {
        let strict = enumerate(n, Kind::Strict);
        let all = enumerate(n, Kind::All);
        let dense = |f: &SymQ| all.iter().map(|nu| f.convert(Basis::M).coeff(nu)).collect::<Vec<_>>();
        let cols: Vec<Vec<Rat>> = strict.iter().map(|mu| dense(&q_product(mu).into_sym())).collect();
        for l in &strict {
            let d = solve(&cols, &dense(&schur_q(l).unwrap().into_sym())).expect("Q_λ in the span of q_μ");
            for (mu, c) in strict.iter().zip(&d) {
                assert!(c.is_integer(), "Q_{l}: coefficient {c} at q_{mu}");
                if mu == l {
                    assert_eq!(c, &Rat::one());
                } else {
                    assert!(c.is_zero() || mu.dominates(l), "Q_{l} has q_{mu} with {mu} not above {l}");
                }
            }
        }
    }
}

#[test]
fn schur_coefficients_of_p_are_nonnegative_integers_below_xi() {
    for n in 1..=7 {
        for xi in enumerate(n, Kind::Strict) {
            for (l, g) in g_coeffs(&xi).unwrap() {
                assert!(g.is_integer() && g >= Rat::zero(), "g_{xi},{l} = {g}");
                if !g.is_zero() {
                    assert!(xi.dominates(&l), "g_{xi},{l} nonzero");
                }
            }
        }
    }
}

#[test]
fn truncated_series_arithmetic() {
    let s = TruncSeries::one(5).add(&TruncSeries::from_poly(&Poly::t(), 5));
    assert_eq!(s.mul(&series_of(&RatFun::geometric(1), 5).unwrap()).coeff(3), &rint(2));
}

use num_bigint::BigInt;
use spinq::arith::{rat, Rat, RadExt};
use spinq::kostka::c_minus_from_spin_k;
use spinq::partitions::{double_partition, enumerate, Kind, Partition};
use spinq::repn::{ch_minus, character, basic_spin_module, seminormal_module, Algebra, CharVector, Mat};
use spinq::schurq::{q, schur_q};
use spinq::specialize::spin_fake_degree;
use spinq::symfunc::{sym_eq, Basis, SymQ};
use std::collections::BTreeMap;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn column(m: &Mat, j: usize) -> Vec<RadExt> {
    (0..m.dim()).map(|i| m.get(i, j)).collect()
}

fn combo(terms: &[(&RadExt, &[RadExt])]) -> Vec<RadExt> {
    let n = terms[0].1.len();
    (0..n).map(|i| terms.iter().fold(RadExt::zero(), |acc, (c, v)| acc.add(&c.mul(&v[i])))).collect()
}

/// On `U^{(2,1)}`, contents `(0,1,0)`: with `x_1 v_T = 0` and `x_2 v_T = √2 v_T`, the relation
/// `s_1x_1 = x_2s_1 − (1 + c_1c_2)` on `v_T` forces `s_1 v_T = (√2/2)(1 − c_1c_2) v_T`.
#[test]
fn s1_on_the_two_one_module() {
    let r = seminormal_module(&p(&[2, 1]), &Partition::empty(), Algebra::Finite).unwrap();
    let half_root2 = RadExt::sqrt_int(2).unwrap().scale(&rat(1, 2));
    let c12 = r.c(1).mul(r.c(2));
    let v = column(&r.identity(), 0);
    let cv = column(&c12, 0);
    let s1v = column(r.s(1), 0);
    assert_eq!(s1v, combo(&[(&half_root2, &v), (&half_root2.neg(), &cv)]));
    // the other sign leaves a nonzero residual x_2 w − (1 + c_1c_2) v
    let w = combo(&[(&half_root2, &v), (&half_root2, &cv)]);
    let x2w: Vec<RadExt> = (0..r.dim).map(|i| (0..r.dim).fold(RadExt::zero(), |a, j| a.add(&r.x(2).get(i, j).mul(&w[j])))).collect();
    let one = RadExt::one();
    let residual = combo(&[(&one, &x2w), (&one.neg(), &v), (&one.neg(), &cv)]);
    assert!(residual.iter().any(|e| !e.is_zero()));
}

#[test]
fn jucys_murphy_elements_commute() {
    let r = seminormal_module(&p(&[3, 1]), &Partition::empty(), Algebra::Finite).unwrap();
    let j = |k: usize| {
        let mut acc = Mat::zero(r.dim);
        for i in 1..k {
            let t = r.transposition(i, k);
            acc = acc.add(&t).add(&r.c(i).mul(r.c(k)).mul(&t));
        }
        acc
    };
    assert!(j(2).commutator(&j(3)).is_zero());
    assert!(j(3).commutator(&j(4)).is_zero());
    assert_eq!(&j(3), r.x(3));
}

#[test]
fn basic_spin_characteristic_is_q_n() {
    for n in 1..=5 {
        let b = basic_spin_module(n).unwrap();
        let values: BTreeMap<Partition, BigInt> = enumerate(n, Kind::Odd)
            .into_iter()
            .map(|a| {
                let t = character(&b, &a).unwrap();
                assert_eq!(t, Rat::from_integer(BigInt::from(2).pow(a.len() as u32)));
                (a, t.to_integer())
            })
            .collect();
        let z = CharVector { label: p(&[n]), values };
        assert_eq!(ch_minus(&z).unwrap(), q(n));
    }
}

#[test]
fn phi_of_doubled_schur_is_q_squared() {
    for xi in [p(&[2]), p(&[2, 1]), p(&[3, 1])] {
        let s = SymQ::basis_elt(Basis::S, &double_partition(&xi).unwrap()).phi();
        let qx = schur_q(&xi).unwrap().into_sym();
        let want = qx.mul(&qx).scale(&spinq::arith::pow2(-(xi.len() as i64)));
        assert!(sym_eq(&s, &want), "{xi}");
    }
    assert!(SymQ::basis_elt(Basis::P, &p(&[2])).phi().is_zero());
}

#[test]
fn q_recursions_and_gamma_form() {
    let q4 = q(1).mul(&q(3)).sub(&q(2).mul(&q(2)).scale(&rat(1, 2)));
    assert_eq!(q4, q(4));
    let qq = |v: &[usize]| schur_q(&p(v)).unwrap();
    let rhs = qq(&[1]).mul(&qq(&[3, 2])).sub(&qq(&[2]).mul(&qq(&[3, 1]))).add(&qq(&[3]).mul(&qq(&[2, 1])));
    assert_eq!(qq(&[3, 2, 1]), rhs);
    let pp = |v: &[usize]| SymQ::basis_elt(Basis::P, &p(v));
    assert_eq!(pp(&[1]).gamma_inner_product(&pp(&[1])).unwrap(), rat(1, 2));
    assert_eq!(pp(&[3]).gamma_inner_product(&pp(&[3])).unwrap(), rat(3, 2));
    assert_eq!(qq(&[2, 1]).inner(&qq(&[2, 1])), Rat::from_integer(4.into()));
}

#[test]
fn c_minus_at_the_column_is_the_spin_fake_degree() {
    for n in 1..=6 {
        let col = Partition::new(vec![1; n]).unwrap();
        for xi in enumerate(n, Kind::Strict) {
            assert_eq!(c_minus_from_spin_k(&xi, &col).unwrap(), spin_fake_degree(&xi).unwrap(), "{xi}");
        }
    }
}

use std::cmp::Ordering;

use jd3_core::asymptotics::{substitute_regime, Regime};
use jd3_core::diagrams::{even_closed_form, hilbert_coefficients, odd_target_dim};
use jd3_core::exact::{nullspace_basis, q, rank, BigRational, QMatrix};
use jd3_core::poly::{s4_group, symmetrize, Character, Monomial, Ring};
use jd3_core::verify::natural_cmp;
use jd3_core::{Poly, VarSet};
use num_traits::Zero;
use proptest::prelude::*;

// Oracle: textbook elimination over ℚ with partial pivoting on the largest
// absolute value, independent of the library's pivot rule and integer path.
fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let best = (rank..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .max_by(|&a, &b| {
                num_traits::abs(m[a][c].clone()).cmp(&num_traits::abs(m[b][c].clone()))
            });
        let Some(p) = best else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                let pivot_row = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn matrix(rows: &[Vec<i64>]) -> QMatrix {
    let cols = rows.first().map_or(0, |r| r.len());
    QMatrix::from_rows(
        cols,
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect(),
    )
    .unwrap()
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

fn y_poly(max_deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..=max_deg, 4),
            -6i64..=6,
            1i64..=4,
        ),
        0..5,
    )
    .prop_map(|terms| {
        let ys = VarSet::y();
        Poly::from_terms(
            &ys,
            terms
                .into_iter()
                .map(|(e, n, d)| (Monomial::new(e), BigRational::new(n.into(), d.into()))),
        )
    })
}

fn homogeneous(d: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, d as usize), -5i64..=5),
        1..4,
    )
    .prop_map(move |terms| {
        let ys = VarSet::y();
        Poly::from_terms(
            &ys,
            terms.into_iter().map(|(slots, c)| {
                let mut e = vec![0u32; 4];
                for s in slots {
                    e[s as usize] += 1;
                }
                (Monomial::new(e), q(c))
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_oracle(rows in int_matrix()) {
        prop_assert_eq!(rank(&matrix(&rows)), oracle_rank(&rows));
    }

    #[test]
    fn rank_of_transpose(rows in int_matrix()) {
        let m = matrix(&rows);
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn rank_nullity(rows in int_matrix()) {
        let m = matrix(&rows);
        let ns = nullspace_basis(&m);
        prop_assert_eq!(rank(&m) + ns.len(), m.cols());
        for v in ns {
            let col = QMatrix::from_rows(1, v.into_iter().map(|x| vec![x]).collect()).unwrap();
            let prod = m.mul(&col).unwrap();
            prop_assert!((0..prod.rows()).all(|i| prod[(i, 0)].is_zero()));
        }
    }

    #[test]
    fn rank_ignores_row_order_and_scaling(rows in int_matrix(), k in 1i64..7, shift in 0usize..5) {
        let mut other = rows.clone();
        other.rotate_left(shift % rows.len());
        other[0] = other[0].iter().map(|x| x * k).collect();
        prop_assert_eq!(rank(&matrix(&rows)), rank(&matrix(&other)));
    }

    #[test]
    fn row_basis_is_reduced(rows in int_matrix()) {
        let (b, pivots) = matrix(&rows).row_basis();
        prop_assert_eq!(b.rows(), pivots.len());
        for (i, &p) in pivots.iter().enumerate() {
            for k in 0..b.rows() {
                prop_assert_eq!(b[(k, p)].clone(), if k == i { q(1) } else { q(0) });
            }
        }
        prop_assert_eq!(b.row_basis().0, b);
    }

    #[test]
    fn additive_inverse(a in y_poly(3), b in y_poly(3)) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn ring_laws(a in y_poly(2), b in y_poly(2), c in y_poly(2)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn symmetrizer_is_a_projector(p in (0u32..=6).prop_flat_map(homogeneous)) {
        let d = p.total_degree().unwrap_or(0);
        let g = s4_group(Character::for_degree(d));
        let s = symmetrize(&p, &g).unwrap();
        prop_assert_eq!(symmetrize(&s, &g).unwrap(), s);
    }

    #[test]
    fn invariants_multiply_with_graded_characters(f in homogeneous(3), g in homogeneous(2)) {
        let sf = symmetrize(&f, &s4_group(Character::Sign)).unwrap();
        let sg = symmetrize(&g, &s4_group(Character::Trivial)).unwrap();
        let prod = &sf * &sg;
        prop_assert_eq!(symmetrize(&prod, &s4_group(Character::Sign)).unwrap(), prod.clone());
        let sq = &sf * &sf;
        prop_assert_eq!(symmetrize(&sq, &s4_group(Character::Trivial)).unwrap(), sq);
    }

    #[test]
    fn regime_substitution_is_a_homomorphism(a in y_poly(3), b in y_poly(3), two in any::<bool>()) {
        let r = if two { Regime::two() } else { Regime::one() };
        let (sa, sb) = (substitute_regime(&a, &r).unwrap(), substitute_regime(&b, &r).unwrap());
        prop_assert_eq!(substitute_regime(&(&a * &b), &r).unwrap(), sa.mul(&sb));
        prop_assert_eq!(substitute_regime(&(&a + &b), &r).unwrap(), sa.add(&sb));
    }

    #[test]
    fn even_series_matches_closed_form(half in 0u32..=100) {
        let n = 2 * half;
        prop_assert_eq!(hilbert_coefficients(n, 0)[n as usize], even_closed_form(n).unwrap());
    }

    #[test]
    fn odd_target_matches_brute_force(half in 0u32..=50) {
        let l = 2 * half + 1;
        let mut count = 0u64;
        for n in 0..=l {
            for m in 0..=l {
                for k in 0..=l {
                    if 2 * n + 6 * m + 4 * k + 9 == l {
                        count += 1;
                    }
                }
            }
        }
        prop_assert_eq!(odd_target_dim(l).unwrap(), count);
    }

    #[test]
    fn natural_order_is_antisymmetric(a in "[a-z.=0-9]{0,8}", b in "[a-z.=0-9]{0,8}") {
        prop_assert_eq!(natural_cmp(&a, &b), natural_cmp(&b, &a).reverse());
        if natural_cmp(&a, &b) == Ordering::Equal {
            prop_assert_eq!(a, b);
        }
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use dioph_core::filtration::{common_adapted_basis, FiltrationProfile, ProfileJson};
use dioph_core::graded_ring::{graded_dim_ideal_power, HomogeneousForm, Subscheme};
use dioph_core::heights::{height, weil, ExactLog, Place, ProjectivePoint};
use dioph_core::linalg::{RowSpace, SparseVec};
use dioph_core::monomial_order::{
    box_points, expand_weights, intersect_saturated, threshold_set, ExponentVector, WeightVector,
};
use dioph_core::surface::{zariski_h0, PicardClass};

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn weights(len: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec((0i64..6, 1i64..4), len)
        .prop_filter("some weight is positive", |v| v.iter().any(|&(n, _)| n > 0))
        .prop_map(|v| WeightVector::new(v.into_iter().map(|(n, d)| q(n, d)).collect()).unwrap())
}

fn reaches(b: &ExponentVector, t: &WeightVector, x: &Q) -> bool {
    b.entries()
        .iter()
        .zip(t.entries())
        .map(|(&e, w)| Q::from_integer(e.into()) * w)
        .sum::<Q>()
        >= *x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn threshold_sets_match_brute_force(t in weights(3), num in 1i64..12, den in 1i64..4) {
        let x = q(num, den);
        let m = threshold_set(&t, &x).unwrap();
        for b in box_points(3, 6) {
            prop_assert_eq!(m.contains(&b), reaches(&b, &t, &x), "b = {:?}", b.entries());
        }
    }

    #[test]
    fn intersections_are_pointwise(t in weights(2), u in weights(2), x in 1i64..8, y in 1i64..8) {
        let m = threshold_set(&t, &q(x, 2)).unwrap();
        let n = threshold_set(&u, &q(y, 2)).unwrap();
        let mn = intersect_saturated(&m, &n).unwrap();
        for b in box_points(2, 10) {
            prop_assert_eq!(mn.contains(&b), m.contains(&b) && n.contains(&b));
        }
    }

    #[test]
    fn expanded_weights_repeat_blocks(t in weights(3), eps in prop::collection::vec(1u32..4, 3)) {
        let te = expand_weights(&t, &eps).unwrap();
        prop_assert_eq!(te.len(), eps.iter().sum::<u32>() as usize);
        let mut k = 0;
        for (w, &e) in t.entries().iter().zip(&eps) {
            for _ in 0..e {
                prop_assert_eq!(&te.entries()[k], w);
                k += 1;
            }
        }
    }

    #[test]
    fn complete_flags_share_an_adapted_basis(
        a in prop::collection::vec(-3i64..4, 9),
        b in prop::collection::vec(-3i64..4, 9),
        xs in prop::collection::vec(1i64..5, 3),
        ys in prop::collection::vec(1i64..5, 3),
    ) {
        let rows = |m: &[i64]| -> Vec<SparseVec> {
            m.chunks(3)
                .map(|r| SparseVec::from_entries(r.iter().enumerate().map(|(c, &v)| (c, BigInt::from(v)))))
                .collect()
        };
        let (va, vb) = (rows(&a), rows(&b));
        prop_assume!(RowSpace::from_rows(3, va.clone()).dim() == 3);
        prop_assume!(RowSpace::from_rows(3, vb.clone()).dim() == 3);
        let flag = |v: &[SparseVec], steps: &[i64]| {
            let levels = (0..=3).rev().map(|k| RowSpace::from_rows(3, v[..k].iter().cloned())).collect();
            let mut x = 0;
            let mut cuts = vec![q(0, 1)];
            for s in steps {
                x += s;
                cuts.push(q(x, 1));
            }
            FiltrationProfile::from_levels(3, cuts, levels).unwrap()
        };
        let p = flag(&va, &xs);
        let r = flag(&vb, &ys);
        let (bp, br) = common_adapted_basis(&p, &r).unwrap();
        prop_assert_eq!(bp.elements.len(), 3);
        prop_assert!(p.is_adapted(&bp.elements) && r.is_adapted(&br.elements));
        prop_assert_eq!(p.mu_average(&bp.elements).unwrap(), p.f_value());
        prop_assert_eq!(r.mu_average(&br.elements).unwrap(), r.f_value());
        // A flag's F-value is the mean of its cut points weighted by the
        // dimensions they cut off.
        let mut x = 0;
        let mut total = 0;
        for s in &xs {
            x += s;
            total += x;
        }
        prop_assert_eq!(p.f_value(), q(total, 3));
    }

    #[test]
    fn profile_json_round_trips(steps in prop::collection::vec((1i64..5, 1i64..4), 1..5)) {
        let n = steps.len();
        let mut x = q(0, 1);
        let mut jumps = vec![(0, 1, n)];
        for (k, (a, d)) in steps.iter().enumerate() {
            x += q(*a, *d);
            let num = i64::try_from(x.numer()).unwrap();
            let den = i64::try_from(x.denom()).unwrap();
            jumps.push((num, den, n - k - 1));
        }
        let json = ProfileJson { ambient_dim: n, jumps };
        let p = FiltrationProfile::try_from(json.clone()).unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        let back: ProfileJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(FiltrationProfile::try_from(back).unwrap(), p);
    }

    #[test]
    fn heights_ignore_scaling(coords in prop::collection::vec(-50i64..50, 3), k in 1i64..30) {
        prop_assume!(coords.iter().any(|&c| c != 0));
        let p = ProjectivePoint::from_i64(&coords).unwrap();
        let scaled: Vec<i64> = coords.iter().map(|c| c * k).collect();
        prop_assert_eq!(&ProjectivePoint::from_i64(&scaled).unwrap(), &p);
        let max = coords.iter().map(|c| c.abs()).max().unwrap();
        let g = coords.iter().fold(0i64, |g, &c| num_integer::gcd(g, c));
        prop_assert_eq!(height(&p), ExactLog::of(q(max, g)).unwrap());
    }

    #[test]
    fn weil_functions_add_over_products(coords in prop::collection::vec(1i64..40, 3), e in 1u32..4) {
        let p = ProjectivePoint::from_i64(&coords).unwrap();
        let x = Subscheme::parse("X", 3, &["x0 - x1 + x2"]).unwrap();
        prop_assume!(HomogeneousForm::parse("x0 - x1 + x2", 3).unwrap().eval_int(p.coords()) != q(0, 1));
        let xe = x.power(e).unwrap();
        for v in [Place::Infinite, Place::Prime(2), Place::Prime(3), Place::Prime(7)] {
            prop_assert_eq!(weil(&xe, v, &p).unwrap(), weil(&x, v, &p).unwrap().times(e as i32));
        }
    }

    #[test]
    fn intersection_numbers_are_bilinear(
        a in prop::collection::vec(-6i64..7, 4),
        b in prop::collection::vec(-6i64..7, 4),
        c in prop::collection::vec(-6i64..7, 4),
    ) {
        let class = |v: &[i64]| PicardClass::new(v[0], v[1..].to_vec());
        let (a, b, c) = (class(&a), class(&b), class(&c));
        prop_assert_eq!(a.dot(&b).unwrap(), b.dot(&a).unwrap());
        let ab = a.add(&b).unwrap();
        prop_assert_eq!(ab.dot(&c).unwrap(), a.dot(&c).unwrap() + b.dot(&c).unwrap());
        let text = a.to_string();
        prop_assert_eq!(PicardClass::parse(&text, Some(3)).unwrap(), a);
    }

    #[test]
    fn point_conditions_are_independent_in_high_degree(m in 1u32..6, extra in 0u32..4) {
        // Order-m vanishing at a point imposes C(m+1, 2) conditions once
        // the degree is at least m − 1.
        let d = m - 1 + extra;
        let y = Subscheme::point("p", &[2, -1, 5]).unwrap();
        let full = ((d + 1) * (d + 2) / 2) as usize;
        let conditions = (m * (m + 1) / 2) as usize;
        prop_assert_eq!(graded_dim_ideal_power(&y, m, d), full - conditions);
    }

    #[test]
    fn blowup_sections_match_plane_curves(d in 0i64..9, m in 0i64..9) {
        // Degree-d plane curves through a point with multiplicity m.
        let expected = if m > d {
            0
        } else {
            ((d + 1) * (d + 2) / 2 - m * (m + 1) / 2) as u64
        };
        let class = PicardClass::new(d, vec![-m]);
        prop_assert_eq!(zariski_h0(&class).unwrap(), expected);
    }
}

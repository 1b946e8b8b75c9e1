use bruhatxi::*;
use exactpoly::{LaurentPoly, Q};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use springerdata::Characteristic;
use wchars::Group;

fn at(p: &LaurentPoly, q: i64) -> Q {
    p.evaluate(&exactpoly::q(q)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn counts_are_nonnegative_integers(odd in any::<bool>(), q in 2i64..60) {
        let ch = if odd { Characteristic::Odd } else { Characteristic::Even };
        let g = Group::new("B2").unwrap();
        let (xi, data) = xi_matrix(&g, ch).unwrap();
        let gfq = springerdata::load_gfq("B2", ch).unwrap();
        let c = cell_counts_from_gfq(&gfq, &xi.hecke).unwrap();
        for row in &c.counts {
            for x in row {
                let v = at(x, q);
                prop_assert!(v.is_integer() && !v.is_negative());
            }
        }
        // |G/B| beta / |G/B| at q, against the signed sum of counts at q.
        for (j, class) in c.classes.iter().enumerate() {
            for e in &xi.matrix.rows {
                let mut acc = Q::zero();
                for k in 0..gfq.classes.len() {
                    acc += gfq.y(&data, e, k) * at(&c.counts[j][k], q);
                }
                let b = beta(&xi, e, class, q).unwrap();
                prop_assert_eq!(b, acc * at(&xi.poincare, q));
            }
        }
    }
}

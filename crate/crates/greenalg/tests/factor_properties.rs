use exactpoly::{PolyMatrix, RatFun};
use greenalg::*;
use proptest::prelude::*;
use wchars::Group;

/// Random ordered partition with a random decreasing b-sequence.
fn random_plan(labels: &[String], perm_seed: &[u32], cuts: &[bool], bs: &[i64]) -> BlockPlan {
    let mut l: Vec<(u32, String)> = perm_seed.iter().copied().zip(labels.iter().cloned()).collect();
    l.sort();
    let mut blocks: Vec<Vec<String>> = vec![vec![]];
    for (i, (_, x)) in l.into_iter().enumerate() {
        if i > 0 && cuts[i] {
            blocks.push(vec![]);
        }
        blocks.last_mut().unwrap().push(x);
    }
    let mut b: Vec<i64> = bs[..blocks.len()].to_vec();
    b.sort_by(|x, y| y.cmp(x));
    BlockPlan::new(blocks, b).unwrap()
}

fn groups() -> Vec<(Group, OmegaMatrix)> {
    ["A3", "B2", "I2(5)", "I2(6)", "I2(8)"]
        .iter()
        .map(|n| {
            let g = Group::new(n).unwrap();
            let o = omega_matrix(&g).unwrap();
            (g, o)
        })
        .collect()
}

fn is_block_triangular(f: &Factorization) -> bool {
    let order = f.plan.order();
    let block: Vec<usize> = f.plan.blocks.iter().enumerate().flat_map(|(i, b)| vec![i; b.len()]).collect();
    let n = order.len();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let p = &f.p.entries[i][j];
            let l = &f.lambda.entries[i][j];
            let p_ok = if block[i] == block[j] {
                *p == if i == j { RatFun::u_pow(f.plan.b[block[i]]) } else { RatFun::zero() }
            } else {
                block[i] < block[j] || p.is_zero()
            };
            p_ok && (block[i] == block[j] || l.is_zero()) && *l == f.lambda.entries[j][i]
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn random_plans_reconstruct(
        which in 0usize..5,
        perm in proptest::collection::vec(any::<u32>(), 10),
        cuts in proptest::collection::vec(any::<bool>(), 10),
        bs in proptest::collection::vec(-3i64..8, 10),
    ) {
        let gs = groups();
        let (_, o) = &gs[which];
        let plan = random_plan(o.labels(), &perm, &cuts, &bs);
        let f = block_factorize(o, &plan).unwrap();
        prop_assert!(f.reproduces(o));
        prop_assert!(is_block_triangular(&f));
    }
}

#[test]
fn refactorising_permuted_blocks_is_unique() {
    let g = Group::new("B2").unwrap();
    let o = omega_matrix(&g).unwrap();
    let a = BlockPlan::from_strs(&[&["sgn"], &["sgn2", "sgn1", "σ"], &["1_W"]], &[4, 1, 0]).unwrap();
    let b = BlockPlan::from_strs(&[&["sgn"], &["σ", "sgn1", "sgn2"], &["1_W"]], &[4, 1, 0]).unwrap();
    let fa = block_factorize(&o, &a).unwrap();
    let fb = block_factorize(&o, &b).unwrap();
    let order = a.order();
    assert_eq!(fb.p.reindex(&order, &order).unwrap(), fa.p);
    assert_eq!(fb.lambda.reindex(&order, &order).unwrap(), fa.lambda);
}

#[test]
fn twenty_points_match_direct() {
    let g = Group::new("B2").unwrap();
    let o = omega_matrix(&g).unwrap();
    let plan = BlockPlan::from_strs(&[&["sgn"], &["sgn2"], &["sgn1", "σ"], &["1_W"]], &[4, 2, 1, 0]).unwrap();
    let direct = block_factorize(&o, &plan).unwrap();
    assert_eq!(factorize_interpolated(&o, &plan, 20, 0).unwrap(), direct);
    assert_eq!(factorize_interpolated(&o, &plan, 20, 2).unwrap(), direct);
}

#[test]
fn one_by_one_from_three_points() {
    let l = vec!["E".to_string()];
    let m = PolyMatrix::new(l.clone(), l.clone(), vec![vec![RatFun::u_pow(2)]]).unwrap();
    let o = OmegaMatrix::from_matrix(m).unwrap();
    let plan = BlockPlan::new(vec![l], vec![1]).unwrap();
    let f = factorize_interpolated(&o, &plan, 3, 0).unwrap();
    assert_eq!(f.p.entries[0][0], RatFun::u_pow(1));
    assert_eq!(f.lambda.entries[0][0], RatFun::one());
}

#[test]
fn omega_is_symmetric_with_nonzero_minors() {
    for n in ["A2", "A3", "B3", "G2", "I2(5)", "H3", "D4"] {
        let o = omega_matrix(&Group::new(n).unwrap()).unwrap();
        assert!(o.is_symmetric(), "{n}");
        assert!(o.principal_minors_nonzero_at(11), "{n}");
    }
}

#[test]
fn family_factorisations_are_polynomial() {
    for n in ["A2", "A3", "A4", "B2", "B3", "G2", "I2(5)", "H3", "D4", "F4"] {
        let r = check_family_conjecture(&Group::new(n).unwrap()).unwrap();
        assert!(r.reconstructs, "{n}");
        assert!(r.holds(), "{n}: polynomial {} nonnegative {}", r.polynomial, r.p_nonnegative);
    }
}

#[test]
fn f4_family_plan_interpolated_matches_direct() {
    let g = Group::new("F4").unwrap();
    let o = omega_matrix(&g).unwrap();
    let plan = family_plan(&g).unwrap();
    let t = std::time::Instant::now();
    let fast = factorize_interpolated(&o, &plan, default_points(&o, &plan), 2).unwrap();
    let t_fast = t.elapsed();
    let t = std::time::Instant::now();
    let direct = block_factorize(&o, &plan).unwrap();
    eprintln!("F4 families: interpolated {t_fast:?}, direct {:?}", t.elapsed());
    assert_eq!(fast, direct);
    assert!(fast.is_integral_polynomial() && fast.p_nonnegative());
}

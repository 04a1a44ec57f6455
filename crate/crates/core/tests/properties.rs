use enumgeom::chern::{tautological_bundle, ChernVector, GradedRing, PolyRing};
use enumgeom::recipes::{self, clemens_excess, normal_bundle_classify, Rigidity};
use enumgeom::schubert::{self, dual_partition, partitions_in_box};
use enumgeom::{BigInt, GrassCtx, Partition, ProjBundleRing, SchubertCycle, Tautological};
use proptest::prelude::*;
use std::sync::OnceLock;

fn contexts() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=9 {
        for k in 1..n {
            if k * (n - k) <= 12 {
                out.push((k, n));
            }
        }
    }
    out
}

fn ctx_strategy() -> impl Strategy<Value = GrassCtx> {
    prop::sample::select(contexts()).prop_map(|(k, n)| GrassCtx::new(k, n).unwrap())
}

fn partition_in(ctx: GrassCtx) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=ctx.cols(), ctx.rows()).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn cycle_in(ctx: GrassCtx) -> impl Strategy<Value = SchubertCycle> {
    prop::collection::vec((partition_in(ctx), -4i64..=4), 0..4)
        .prop_map(move |terms| SchubertCycle::from_terms(ctx, terms).unwrap())
}

fn triple() -> impl Strategy<Value = (SchubertCycle, SchubertCycle, SchubertCycle)> {
    ctx_strategy().prop_flat_map(|ctx| (cycle_in(ctx), cycle_in(ctx), cycle_in(ctx)))
}

fn conic_space() -> &'static ProjBundleRing {
    static SPACE: OnceLock<ProjBundleRing> = OnceLock::new();
    SPACE.get_or_init(|| recipes::conic_bundle(5).unwrap().0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative_and_commutative((x, y, z) in triple()) {
        let xy = x.multiply(&y).unwrap();
        prop_assert_eq!(&xy, &y.multiply(&x).unwrap());
        prop_assert_eq!(xy.multiply(&z).unwrap(), x.multiply(&y.multiply(&z).unwrap()).unwrap());
    }

    #[test]
    fn strategies_agree((x, y, _) in triple()) {
        prop_assert_eq!(
            x.multiply_with(&y, schubert::Strategy::Giambelli).unwrap(),
            x.multiply_with(&y, schubert::Strategy::LittlewoodRichardson).unwrap()
        );
    }

    #[test]
    fn products_respect_grading(
        (ctx, a, b) in ctx_strategy().prop_flat_map(|c| (Just(c), partition_in(c), partition_in(c)))
    ) {
        let p = SchubertCycle::class(ctx, a.clone()).unwrap()
            .multiply(&SchubertCycle::class(ctx, b.clone()).unwrap()).unwrap();
        let d = a.weight() + b.weight();
        prop_assert!(ctx.is_homogeneous(&p, d));
        if d > ctx.dim() {
            prop_assert!(p.is_zero());
        }
        // Schubert structure constants are nonnegative
        prop_assert!(p.terms().all(|(_, c)| c >= &BigInt::from(0)));
    }

    #[test]
    fn poincare_duality((ctx, a) in ctx_strategy().prop_flat_map(|c| (Just(c), partition_in(c)))) {
        let dual = dual_partition(&a, ctx).unwrap();
        let x = SchubertCycle::class(ctx, a.clone()).unwrap();
        for b in partitions_in_box(ctx.dim() - a.weight(), ctx.rows(), ctx.cols()) {
            let y = SchubertCycle::class(ctx, b.clone()).unwrap();
            let want = BigInt::from(u8::from(b == dual));
            prop_assert_eq!(x.multiply(&y).unwrap().integrate(), want);
        }
    }

    #[test]
    fn tensor_line_round_trip(c in prop::collection::vec(-5i64..=5, 4), rank in 0usize..=3) {
        let ring = PolyRing::new(vec![1, 2, 3, 1], 7);
        let classes = (0..rank).map(|i| ring.scale(&ring.var(i), &BigInt::from(c[i]))).collect();
        let e = ChernVector::new(ring.clone(), classes).unwrap();
        let l = ring.scale(&ring.var(3), &BigInt::from(c[3]));
        let back = e.tensor_line(&l).unwrap().tensor_line(&ring.neg(&l)).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn segre_inverts_chern((ctx, c1, c2) in ctx_strategy().prop_flat_map(|c| (Just(c), -3i64..=3, -3i64..=3))) {
        let e = ChernVector::new(ctx, vec![
            SchubertCycle::special(ctx, 1).scale(&BigInt::from(c1)),
            SchubertCycle::class(ctx, Partition::column(2)).unwrap_or_else(|_| ctx.zero()).scale(&BigInt::from(c2)),
        ]).unwrap();
        let s = ctx.sum(&e.segre(ctx.dim()));
        prop_assert_eq!(ctx.mul(&s, &e.total()), ctx.one());
    }

    #[test]
    fn whitney_for_tautological_sequence(ctx in ctx_strategy()) {
        let s = tautological_bundle(ctx, Tautological::Sub).unwrap();
        let q = tautological_bundle(ctx, Tautological::Quotient).unwrap();
        prop_assert_eq!(s.whitney_sum(&q).total(), ctx.one());
        prop_assert_eq!(s.dual(), tautological_bundle(ctx, Tautological::SubDual).unwrap());
    }

    #[test]
    fn normal_bundle_degree(a in -1000i64..=1000) {
        let s = normal_bundle_classify(a);
        prop_assert_eq!(s.a + s.b, -2);
        prop_assert_eq!(s.h0 as i64, (a + 1).max(0) + (s.b + 1).max(0));
        prop_assert_eq!(s.rigidity == Rigidity::Rigid, a == -1);
    }

    #[test]
    fn constant_count_excess(d in 1u64..1_000_000) {
        prop_assert_eq!(clemens_excess(d).unwrap().excess, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reduce_is_idempotent_and_pushforward_is_linear_over_base(
        coeffs in prop::collection::vec(cycle_in(GrassCtx::new(3, 5).unwrap()), 1..9),
        base in cycle_in(GrassCtx::new(3, 5).unwrap()),
    ) {
        let space = conic_space();
        let x = space.reduce(coeffs);
        prop_assert_eq!(space.reduce(x.coeffs().to_vec()), x.clone());
        let pulled = space.pullback(&base).unwrap();
        prop_assert_eq!(space.mul(&x, &pulled).pushforward(), x.pushforward().multiply(&base).unwrap());
    }
}

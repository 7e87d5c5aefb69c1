use convspace::conical::{addpt, convpt, s1, scalept, weight, ScaledPoint};
use convspace::dist::{pushforward, FiniteDist, IndexMap, Permutation};
use convspace::multiary::binconv_from_convn;
use convspace::space::{RatLine, RatVectorSpace, Simplex};
use convspace::suite::Instance;
use convspace::{ConvexSpace, LawConfig, Prob, Rat};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn prob() -> impl Strategy<Value = Prob> {
    (0i64..=30, 1i64..=30).prop_map(|(n, d)| Prob::new(n.min(d), d).unwrap())
}

/// Distributions from nonnegative integer masses, not all zero.
fn dist(n: usize) -> impl Strategy<Value = FiniteDist> {
    prop::collection::vec(0i64..6, n)
        .prop_filter("some mass", |m| m.iter().any(|&x| x > 0))
        .prop_map(|m| {
            let total: i64 = m.iter().sum();
            FiniteDist::new(m.into_iter().map(|x| Rat::new(x, total).unwrap()).collect()).unwrap()
        })
}

fn dist_and_points() -> impl Strategy<Value = (FiniteDist, Vec<Rat>)> {
    (1usize..=6).prop_flat_map(|n| (dist(n), prop::collection::vec(rat(), n)))
}

proptest! {
    #[test]
    fn prob_parse_round_trip(p in prob()) {
        prop_assert_eq!(p.to_string().parse::<Prob>().unwrap(), p);
    }

    #[test]
    fn line_conv_is_affine(p in prob(), x in rat(), y in rat()) {
        let expected = p.value() * &x + p.complement().value() * &y;
        prop_assert_eq!(RatLine.conv(&p, &x, &y), expected);
    }

    #[test]
    fn line_convn_is_the_weighted_average((d, xs) in dist_and_points()) {
        let expected: Rat = d.weights().iter().zip(&xs).map(|(w, x)| w * x).sum();
        prop_assert_eq!(RatLine.convn(&d, &xs).unwrap(), expected);
    }

    #[test]
    fn convn_ignores_zero_weight_points((d, xs) in dist_and_points(), junk in rat()) {
        let mut padded = d.weights().to_vec();
        padded.push(Rat::zero());
        let padded = FiniteDist::new(padded).unwrap();
        let mut more = xs.clone();
        more.push(junk);
        prop_assert_eq!(RatLine.convn(&padded, &more).unwrap(), RatLine.convn(&d, &xs).unwrap());
    }

    #[test]
    fn binconv_from_convn_matches(p in prob(), x in rat(), y in rat()) {
        prop_assert_eq!(binconv_from_convn(&RatLine, &p, &x, &y).unwrap(), RatLine.conv(&p, &x, &y));
    }

    #[test]
    fn simplex_mixture_stays_normalised(p in prob(), a in dist(4), b in dist(4)) {
        let m = Simplex::new(4).conv(&p, &a, &b);
        prop_assert!(m.weights().iter().sum::<Rat>().is_one());
    }

    #[test]
    fn pushforward_preserves_mass(d in dist(5), table in prop::collection::vec(0usize..3, 5)) {
        let u = IndexMap::new(table, 3).unwrap();
        let e = pushforward(&d, &u).unwrap();
        prop_assert_eq!(e.arity(), 3);
        prop_assert!(e.weights().iter().sum::<Rat>().is_one());
    }

    #[test]
    fn permuted_convn_is_invariant(
        (d, xs) in dist_and_points(),
        keys in prop::collection::vec(any::<u32>(), 6),
    ) {
        let n = d.arity();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (keys[i], i));
        let s = Permutation::new(order).unwrap();
        let lhs = RatLine.convn(&d.permute(&s).unwrap(), &s.apply(&xs)).unwrap();
        prop_assert_eq!(lhs, RatLine.convn(&d, &xs).unwrap());
    }

    #[test]
    fn addpt_adds_weights(a in 1i64..20, b in 1i64..20, x in rat(), y in rat()) {
        let sa = ScaledPoint::scaled(Rat::from_int(a), x).unwrap();
        let sb = ScaledPoint::scaled(Rat::from_int(b), y).unwrap();
        prop_assert_eq!(weight(&addpt(&RatLine, &sa, &sb)), Rat::from_int(a + b));
        prop_assert_eq!(addpt(&RatLine, &sa, &sb), addpt(&RatLine, &sb, &sa));
    }

    #[test]
    fn convpt_of_embedded_points_is_embedded(p in prob(), x in rat(), y in rat()) {
        let lhs = convpt(&RatLine, &p, &s1(x.clone()), &s1(y.clone()));
        prop_assert_eq!(lhs, s1(RatLine.conv(&p, &x, &y)));
    }

    #[test]
    fn negative_scale_is_rejected(c in -20i64..0, x in rat()) {
        prop_assert!(scalept(&Rat::from_int(c), &s1(x)).is_err());
    }
}

#[test]
fn vector_space_rejects_wrong_dimension() {
    use convspace::space::RatVector;
    let space = RatVectorSpace::new(2);
    let bad = RatVector::from_fracs(&[(1, 1)]).unwrap();
    assert!(space.validate(&bad).is_err());
    let d = FiniteDist::uniform(2).unwrap();
    let good = RatVector::from_fracs(&[(1, 1), (2, 1)]).unwrap();
    assert!(space.convn(&d, &[good, bad]).is_err());
}

#[test]
fn every_named_instance_runs_its_full_suite() {
    let cfg = LawConfig::new(11, 40);
    for name in Instance::NAMES {
        let report = Instance::from_name(name).unwrap().run(&cfg);
        let broken = name.starts_with("broken");
        assert_eq!(report.all_hold(), !broken, "{name}:\n{report}");
        if broken {
            assert!(report.failures().all(|o| o.counterexample.is_some()));
        }
    }
}

#[test]
fn suite_is_deterministic_per_seed() {
    let cfg = LawConfig::new(3, 25);
    let a = Instance::from_name("fdist3").unwrap().run(&cfg);
    let b = Instance::from_name("fdist3").unwrap().run(&cfg);
    assert_eq!(a, b);
    assert_eq!(a.to_string(), b.to_string());
}

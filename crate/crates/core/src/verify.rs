//! Self-checks: the reference counts and the algebraic properties the
//! engine must satisfy, runnable outside the test harness.
//!
//! Random checks draw from a fixed-seed generator so every run is
//! reproducible.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chern::{tautological_bundle, universal_sym_chern, ChernVector, GradedRing, PolyRing};
use crate::error::Error;
use crate::projbundle::ProjBundleRing;
use crate::recipes::{self, builtin_ledgers};
use crate::schubert::{dual_partition, GrassCtx, Partition, SchubertCycle, Strategy, Tautological};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Paper,
    Properties,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "paper" => Ok(Suite::Paper),
            "properties" => Ok(Suite::Properties),
            "all" => Ok(Suite::All),
            other => Err(Error::Input(format!(
                "unknown suite '{other}' (expected paper, properties or all)"
            ))),
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub elapsed_ms: u128,
}

impl Check {
    fn new(name: &str, expected: impl ToString, actual: impl ToString, elapsed: Duration) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Check {
            name: name.to_string(),
            pass: expected == actual,
            expected,
            actual,
            elapsed_ms: elapsed.as_millis(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {}: expected {}, got {} ({} ms)",
            self.name, self.expected, self.actual, self.elapsed_ms
        )
    }
}

type CheckFn = fn() -> (String, String);

fn timed(name: &'static str, f: CheckFn) -> (&'static str, CheckFn) {
    (name, f)
}

fn paper_checks() -> Vec<(&'static str, CheckFn)> {
    vec![
        timed("lines on the quintic threefold", || {
            let r = recipes::lines_on_complete_intersection(4, &[5]);
            ("2875".into(), show_count(r))
        }),
        timed("conics on the quintic threefold", || {
            let r = recipes::conics_on_quintic_type(5);
            ("609250".into(), show_count(r))
        }),
        timed("lines on the cubic surface", || {
            let r = recipes::lines_on_complete_intersection(3, &[3]);
            ("27".into(), show_count(r))
        }),
        timed("quartic threefold: one-parameter family of lines", || {
            let r = recipes::lines_on_complete_intersection(4, &[4]);
            ("family 1".into(), show_count(r))
        }),
        timed("integral of sigma_1^4 on G(2,4)", || {
            ("2".into(), special_power_degree(2, 4).to_string())
        }),
        timed("integral of sigma_1^6 on G(2,5)", || {
            ("5".into(), special_power_degree(2, 5).to_string())
        }),
        timed("degeneration ledgers", || {
            let verdicts = builtin_ledgers().check_all();
            let failed: Vec<String> = verdicts
                .iter()
                .filter(|v| !v.pass)
                .map(|v| format!("{} residual {}", v.name, v.residual))
                .collect();
            let actual = if failed.is_empty() {
                "all balance".to_string()
            } else {
                failed.join("; ")
            };
            ("all balance".into(), actual)
        }),
        timed("constant count excess for d = 1..1000", || {
            let bad: Vec<u64> = (1..=1000)
                .filter(|&d| recipes::clemens_excess(d).map_or(true, |c| c.excess != 0))
                .collect();
            ("0 nonzero".into(), format!("{} nonzero", bad.len()))
        }),
        timed("normal bundle degrees for a = -10..10", || {
            let bad = (-10..=10)
                .filter(|&a| {
                    let s = recipes::normal_bundle_classify(a);
                    let rigid = s.rigidity == recipes::Rigidity::Rigid;
                    s.a + s.b != -2 || rigid != (s.a == -1 && s.b == -1)
                })
                .count();
            ("0 violations".into(), format!("{bad} violations"))
        }),
        timed("equivalence of a rigid curve", || {
            let pt = GrassCtx::point();
            let zero_dim = recipes::equivalence_zero_dim(&pt, &[pt.one()], &[pt.one()]);
            let unobstructed = recipes::equivalence_unobstructed(0, &ChernVector::trivial(pt, 0))
                .map_or_else(|e| e.to_string(), |v| v.to_string());
            ("1, 1".into(), format!("{zero_dim}, {unobstructed}"))
        }),
        timed("multiple cover weights 1/m^3 for m = 1..10", || {
            let bad = (1..=10i64)
                .filter(|&m| {
                    let want = BigRational::new(BigInt::one(), BigInt::from(m * m * m));
                    recipes::multiple_cover_weight(m).ok() != Some(want)
                })
                .count();
            ("0 mismatches".into(), format!("{bad} mismatches"))
        }),
    ]
}

fn property_checks() -> Vec<(&'static str, CheckFn)> {
    vec![
        timed("Whitney c(S)c(Q) = 1 for k(n-k) <= 12", || {
            let bad: Vec<String> = small_grassmannians()
                .into_iter()
                .filter(|&ctx| {
                    let s = tautological_bundle(ctx, Tautological::Sub).unwrap().total();
                    let q = tautological_bundle(ctx, Tautological::Quotient)
                        .unwrap()
                        .total();
                    s.multiply(&q).unwrap() != SchubertCycle::one(ctx)
                })
                .map(|ctx| ctx.to_string())
                .collect();
            ("[]".into(), format!("{bad:?}"))
        }),
        timed("duality pairing for k(n-k) <= 12", || {
            let mut bad = 0usize;
            for ctx in small_grassmannians() {
                let basis = ctx.basis();
                for a in &basis {
                    let dual = dual_partition(a, ctx).unwrap();
                    for b in basis
                        .iter()
                        .filter(|b| a.weight() + b.weight() == ctx.dim())
                    {
                        let x = SchubertCycle::class(ctx, a.clone()).unwrap();
                        let y = SchubertCycle::class(ctx, b.clone()).unwrap();
                        let got = x.multiply(&y).unwrap().integrate();
                        let want = BigInt::from(u8::from(*b == dual));
                        if got != want {
                            bad += 1;
                        }
                    }
                }
            }
            ("0 violations".into(), format!("{bad} violations"))
        }),
        timed(
            "associativity, commutativity, grading (100 triples per context)",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
                let mut bad = 0usize;
                for ctx in small_grassmannians() {
                    for _ in 0..100 {
                        let x = random_cycle(&mut rng, ctx);
                        let y = random_cycle(&mut rng, ctx);
                        let z = random_cycle(&mut rng, ctx);
                        let xy = x.multiply(&y).unwrap();
                        if xy != y.multiply(&x).unwrap() {
                            bad += 1;
                        }
                        if xy.multiply(&z).unwrap() != x.multiply(&y.multiply(&z).unwrap()).unwrap()
                        {
                            bad += 1;
                        }
                        let a = rng.gen_range(0..=ctx.dim());
                        let b = rng.gen_range(0..=ctx.dim());
                        let prod = x
                            .homogeneous_part(a)
                            .multiply(&y.homogeneous_part(b))
                            .unwrap();
                        if !prod.is_zero() && prod.degree_range() != Some((a + b, a + b)) {
                            bad += 1;
                        }
                    }
                }
                ("0 violations".into(), format!("{bad} violations"))
            },
        ),
        timed("Giambelli/Pieri agrees with Littlewood-Richardson", || {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let mut bad = 0usize;
            for ctx in small_grassmannians() {
                for _ in 0..20 {
                    let x = random_cycle(&mut rng, ctx);
                    let y = random_cycle(&mut rng, ctx);
                    if x.multiply_with(&y, Strategy::Giambelli).unwrap()
                        != x.multiply_with(&y, Strategy::LittlewoodRichardson).unwrap()
                    {
                        bad += 1;
                    }
                }
            }
            ("0 mismatches".into(), format!("{bad} mismatches"))
        }),
        timed(
            "Sym^m Chern classes against numeric roots (r <= 3, m <= 5)",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(11);
                let mut bad = 0usize;
                for r in 1..=3 {
                    for m in 0..=5 {
                        let universal = universal_sym_chern(r, m);
                        for _ in 0..10 {
                            let roots: Vec<i64> = (0..r).map(|_| rng.gen_range(-6..=6)).collect();
                            if !sym_power_matches_roots(&universal, &roots, m) {
                                bad += 1;
                            }
                        }
                    }
                }
                ("0 mismatches".into(), format!("{bad} mismatches"))
            },
        ),
        timed("segre(E) c(E) = 1 up to the top degree", || {
            let mut rng = ChaCha8Rng::seed_from_u64(13);
            let mut bad = 0usize;
            for ctx in small_grassmannians() {
                for _ in 0..5 {
                    let rank = rng.gen_range(0..=4);
                    let classes = (1..=rank)
                        .map(|i| random_homogeneous(&mut rng, ctx, i))
                        .collect();
                    let e = ChernVector::new(ctx, classes).unwrap();
                    let s = ctx.sum(&e.segre(ctx.dim()));
                    if ctx.mul(&s, &e.total()) != ctx.one() {
                        bad += 1;
                    }
                }
            }
            ("0 violations".into(), format!("{bad} violations"))
        }),
        timed(
            "plane conics: Grothendieck relation and pushforward of zeta powers",
            || {
                let (space, _) = recipes::conic_bundle(5).unwrap();
                let r = space.rank();
                let segre = space.bundle().segre(space.base().dim());
                let mut bad = 0usize;
                for (j, s_j) in segre.iter().enumerate() {
                    if space.zeta_pow(r - 1 + j).pushforward() != *s_j {
                        bad += 1;
                    }
                }
                // reducing an already canonical element changes nothing
                let x = space.zeta_pow(r + 3);
                if space.reduce(x.coeffs().to_vec()) != x {
                    bad += 1;
                }
                // the relation itself: Σ c_i(E) ζ^{r−i} = 0
                let rel = (0..=r).fold(space.zero(), |acc, i| {
                    let term = space.mul(
                        &space.pullback(&space.bundle_class(i)).unwrap(),
                        &space.zeta_pow(r - i),
                    );
                    space.add(&acc, &term)
                });
                if !rel.is_zero() {
                    bad += 1;
                }
                ("0 violations".into(), format!("{bad} violations"))
            },
        ),
        timed("projection formula on plane conics", || {
            let (space, _) = recipes::conic_bundle(5).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            let mut bad = 0usize;
            for _ in 0..25 {
                let x = random_pb(&mut rng, &space);
                let b = random_cycle(&mut rng, space.base());
                let lhs = space.mul(&x, &space.pullback(&b).unwrap()).pushforward();
                let rhs = x.pushforward().multiply(&b).unwrap();
                if lhs != rhs {
                    bad += 1;
                }
            }
            ("0 violations".into(), format!("{bad} violations"))
        }),
        timed("tensor_line(tensor_line(E, l), -l) = E", || {
            let ring = PolyRing::new(vec![1, 2, 3, 1], 8);
            let e = ChernVector::new(ring.clone(), vec![ring.var(0), ring.var(1), ring.var(2)])
                .unwrap();
            let l = ring.var(3);
            let back = e
                .tensor_line(&l)
                .unwrap()
                .tensor_line(&ring.neg(&l))
                .unwrap();
            ("true".into(), (back == e).to_string())
        }),
    ]
}

/// Runs a suite, evaluating independent checks on separate threads. Results
/// keep the suite's order.
pub fn run_suite(suite: Suite) -> Vec<Check> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Paper | Suite::All) {
        checks.extend(paper_checks());
    }
    if matches!(suite, Suite::Properties | Suite::All) {
        checks.extend(property_checks());
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|&(name, f)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let (expected, actual) = f();
                    Check::new(name, expected, actual, start.elapsed())
                })
            })
            .collect();
        handles
            .into_iter()
            .zip(&checks)
            .map(|(h, &(name, _))| {
                h.join().unwrap_or_else(|_| Check {
                    name: name.to_string(),
                    expected: "completion".into(),
                    actual: "panicked".into(),
                    pass: false,
                    elapsed_ms: 0,
                })
            })
            .collect()
    })
}

fn show_count(r: crate::Result<recipes::CountReport>) -> String {
    match r {
        Ok(report) => match report.outcome {
            recipes::Outcome::Count(c) => c.to_string(),
            recipes::Outcome::FamilyDimension(d) => format!("family {d}"),
        },
        Err(e) => format!("error: {e}"),
    }
}

fn special_power_degree(k: usize, n: usize) -> BigInt {
    let ctx = GrassCtx::new(k, n).unwrap();
    SchubertCycle::special(ctx, 1)
        .pow(ctx.dim() as u32)
        .integrate()
}

/// Every `G(k,n)` with `0 < k < n` and `0 < k(n−k) ≤ 12`.
pub fn small_grassmannians() -> Vec<GrassCtx> {
    let mut out = Vec::new();
    for n in 2..=13 {
        for k in 1..n {
            if k * (n - k) <= 12 {
                out.push(GrassCtx::new(k, n).unwrap());
            }
        }
    }
    out
}

fn random_partition(rng: &mut impl Rng, ctx: GrassCtx) -> Partition {
    let mut parts: Vec<u32> = (0..ctx.rows())
        .map(|_| rng.gen_range(0..=ctx.cols()))
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

fn random_cycle(rng: &mut impl Rng, ctx: GrassCtx) -> SchubertCycle {
    let n = rng.gen_range(1..=3);
    let terms: Vec<(Partition, i64)> = (0..n)
        .map(|_| (random_partition(rng, ctx), rng.gen_range(-3..=3)))
        .collect();
    SchubertCycle::from_terms(ctx, terms).unwrap()
}

fn random_homogeneous(rng: &mut impl Rng, ctx: GrassCtx, d: usize) -> SchubertCycle {
    let basis = crate::schubert::partitions_in_box(d, ctx.rows(), ctx.cols());
    let terms: Vec<(Partition, i64)> = basis
        .into_iter()
        .map(|l| (l, rng.gen_range(-2..=2)))
        .collect();
    SchubertCycle::from_terms(ctx, terms).unwrap()
}

fn random_pb(rng: &mut impl Rng, space: &ProjBundleRing) -> crate::PBElement {
    let coeffs = (0..space.rank())
        .map(|_| random_cycle(rng, space.base()))
        .collect();
    space.reduce(coeffs)
}

/// Compares the universal classes of `Sym^m E` evaluated at the elementary
/// symmetric functions of `roots` with the elementary symmetric functions of
/// the expanded root multiset `{Σ a_j x_j}`.
pub fn sym_power_matches_roots(
    universal: &[crate::UniversalPoly],
    roots: &[i64],
    m: usize,
) -> bool {
    let r = roots.len();
    let base = elementary_of(roots.iter().map(|&x| BigInt::from(x)));
    let expanded: Vec<BigInt> = crate::chern::sym_roots(r, m)
        .iter()
        .map(|a| {
            a.iter()
                .zip(roots)
                .map(|(&aj, &x)| BigInt::from(aj as i64 * x))
                .sum()
        })
        .collect();
    let want = elementary_of(expanded.into_iter());
    let values: Vec<BigInt> = base[1..].to_vec();
    universal
        .iter()
        .enumerate()
        .all(|(i, u)| u.eval(&values) == want[i + 1])
        && universal.len() + 1 == want.len()
}

/// `e_0..e_len` of a list of integers, from `Π (1 + x t)`.
fn elementary_of(xs: impl Iterator<Item = BigInt>) -> Vec<BigInt> {
    let mut e = vec![BigInt::one()];
    for x in xs {
        e.push(BigInt::zero());
        for i in (1..e.len()).rev() {
            let prev = e[i - 1].clone();
            e[i] += prev * &x;
        }
    }
    e
}

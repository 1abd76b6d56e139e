//! Acceptance suite: one test per headline claim, each printing a single
//! PASS/FAIL line. Everything is exact (big-integer or big-rational
//! equality); there are no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::process::Command;

use num_bigint::BigInt;

use hypersub::combinatorics::{identity_sweep, EulerianTable};
use hypersub::dualgraph::{build_dual_graph, check_dual_graph};
use hypersub::geometry::{
    containing_translates, Cell, Face, LatticeVector, Rational, RationalPoint,
};
use hypersub::subdivision::{
    ehrhart_normalized_volume, lattice_point_count, PairMode, Subdivision, VerifyOptions,
};

/// Print the verdict line and fail the test afterwards if needed.
fn conclude(name: &str, violations: &[String]) {
    let ok = violations.is_empty();
    println!("acceptance {name}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(
        ok,
        "criterion `{name}`: {} violations, first ones: {:#?}",
        violations.len(),
        &violations[..violations.len().min(5)]
    );
}

/// Identity sweep over 1 <= d <= 6, i in [d], 1 <= r <= 5: 105 triples, exact
/// equality on every one.
#[test]
fn criterion_1_identity_sweep() {
    let mut violations = Vec::new();
    let sweep = identity_sweep(6, 5).expect("valid sweep bounds");
    if sweep.entries.len() != 105 {
        violations.push(format!("expected 105 triples, got {}", sweep.entries.len()));
    }
    for entry in &sweep.entries {
        if !entry.holds() {
            violations.push(format!(
                "(d,i,r)=({},{},{}): lhs {} != rhs {}",
                entry.d, entry.i, entry.r, entry.lhs, entry.rhs
            ));
        }
    }
    conclude("1 identity sweep d<=6 r<=5", &violations);
}

/// Ehrhart normalized volume equals the Eulerian number for all d <= 5,
/// including the hand-checked anchor (3, 2) with counts 1, 6, 19, 44.
#[test]
fn criterion_2_ehrhart_volume_oracle() {
    let mut violations = Vec::new();
    let anchor: Vec<_> = (0..=3)
        .map(|n| lattice_point_count(3, 2, n).expect("valid"))
        .collect();
    let wanted: Vec<num_bigint::BigUint> =
        vec![1u32.into(), 6u32.into(), 19u32.into(), 44u32.into()];
    if anchor != wanted {
        violations.push(format!("anchor counts for (3,2): {anchor:?}, want {wanted:?}"));
    }
    for d in 1..=5usize {
        let table = EulerianTable::new(d).expect("d >= 1");
        for i in 1..=d {
            let by_counting = ehrhart_normalized_volume(d, i).expect("valid");
            let by_recurrence = table.get(i as i64);
            if by_counting != by_recurrence {
                violations.push(format!(
                    "(d,i)=({d},{i}): Ehrhart {by_counting} != Eulerian {by_recurrence}"
                ));
            }
        }
    }
    conclude("2 Ehrhart volume = Eulerian, d<=5", &violations);
}

/// Every H(r, d, i) with d <= 4, i in [d], r <= 3 verifies cleanly with 1000
/// samples at seed 0: containment, coverage, pairwise faces (all pairs; the
/// d = 4 cases are also re-checked in sampled-pair mode with 10^4 draws), and
/// exact volume additivity.
#[test]
fn criterion_3_subdivision_validity() {
    let mut violations = Vec::new();
    for d in 1..=4usize {
        for i in 1..=d {
            for r in 1..=3usize {
                let s = Subdivision::build(r, d, i).expect("valid parameters");
                let report = s.verify(&VerifyOptions {
                    samples: 1000,
                    seed: 0,
                    ..VerifyOptions::default()
                });
                if report.pair_mode != PairMode::Exhaustive {
                    violations.push(format!("({r},{d},{i}): expected exhaustive pairs"));
                }
                if !report.passed() {
                    violations.push(format!("({r},{d},{i}) failed:\n{report}"));
                }
                if d == 4 {
                    let sampled = s.verify(&VerifyOptions {
                        samples: 100,
                        seed: 0,
                        pair_exhaustive_cap: 0,
                        pair_samples: 10_000,
                    });
                    if s.cells().len() >= 2 && sampled.pairs_checked < 10_000 {
                        violations.push(format!(
                            "({r},{d},{i}): only {} sampled pairs",
                            sampled.pairs_checked
                        ));
                    }
                    if !sampled.passed() {
                        violations.push(format!("({r},{d},{i}) sampled-pair run failed"));
                    }
                }
            }
        }
    }
    conclude("3 subdivision validity d<=4 r<=3", &violations);
}

/// On more than 10^4 seeded random rational points (denominators <= 100,
/// integral coordinate sum, d <= 4), four membership routes agree exactly:
/// the H-description, the floor/fractional criterion, the constructed family
/// of containing translates, and a brute-force scan of the +-1 lattice
/// window around the floor, over all levels.
#[test]
fn criterion_4_membership_oracle_equivalence() {
    let mut violations = Vec::new();
    let mut rng = TestRng::new(0xACCE_0004);
    let mut total_points = 0usize;
    for (d, points) in [(1usize, 3000usize), (2, 3000), (3, 2500), (4, 1600)] {
        for _ in 0..points {
            total_points += 1;
            let x = random_integral_sum_point(&mut rng, d);
            let profile = x.frac_profile().expect("integral sum by construction");
            if !profile.support.is_empty()
                && !(1 <= profile.frac_sum && profile.frac_sum < profile.support.len())
            {
                violations.push(format!("{x:?}: fractional total out of bounds"));
                continue;
            }
            let family: BTreeSet<Cell> = containing_translates(&x)
                .expect("integral sum")
                .into_iter()
                .collect();
            let mut window_hits = BTreeSet::new();
            for v in window_around(&profile.floor) {
                for j in 1..=d {
                    let cell = Cell::new(v.clone(), j).expect("level in range");
                    let by_h = cell.contains(&x).expect("same dimension");
                    let by_criterion = cell.contains_by_criterion(&x).expect("integral sum");
                    if by_h != by_criterion {
                        violations.push(format!("{x:?} vs {cell}: H {by_h}, criterion {by_criterion}"));
                    }
                    if by_h != family.contains(&cell) {
                        violations.push(format!("{x:?} vs {cell}: H {by_h}, family disagrees"));
                    }
                    if by_h {
                        window_hits.insert(cell);
                    }
                }
            }
            if window_hits != family {
                violations.push(format!("{x:?}: window scan found a different family"));
            }
            if violations.len() > 20 {
                conclude("4 membership oracle equivalence", &violations);
            }
        }
    }
    assert!(total_points >= 10_000);
    conclude("4 membership oracle equivalence", &violations);
}

/// Exhaustively over all pairs of cells with translations in {-1,0,1}^{d+1}
/// and all level pairs, d <= 3: the vertex set of the intersection equals the
/// intersection of the vertex sets.
#[test]
fn criterion_5_intersection_formula() {
    let mut violations = Vec::new();
    for d in 1..=3usize {
        let mut cells = Vec::new();
        for v in window_around(&LatticeVector::zeros(d + 1)) {
            for j in 1..=d {
                cells.push(Cell::new(v.clone(), j).expect("level in range"));
            }
        }
        let vertex_sets: Vec<BTreeSet<LatticeVector>> =
            cells.iter().map(|c| c.vertices()).collect();
        for (a, c1) in cells.iter().enumerate() {
            for (b, c2) in cells.iter().enumerate().skip(a) {
                let face = c1.intersect(c2).expect("same dimension");
                let expected: BTreeSet<LatticeVector> = vertex_sets[a]
                    .intersection(&vertex_sets[b])
                    .cloned()
                    .collect();
                let actual = match &face {
                    Face::Empty => BTreeSet::new(),
                    _ => face.vertices().expect("nonempty"),
                };
                if actual != expected {
                    violations.push(format!("{c1} vs {c2}: {actual:?} != {expected:?}"));
                }
                if face != c2.intersect(c1).expect("same dimension") {
                    violations.push(format!("{c1} vs {c2}: asymmetric intersection"));
                }
            }
        }
    }
    conclude("5 intersection formula d<=3", &violations);
}

/// The unit-translation adjacency rule agrees with the facet-dimension rule
/// on all cell pairs for d <= 4, r <= 3, and H(2, 2, 1) is the star K_{1,3}.
#[test]
fn criterion_6_dual_graph() {
    let mut violations = Vec::new();
    for d in 1..=4usize {
        for i in 1..=d {
            for r in 1..=3usize {
                let s = Subdivision::build(r, d, i).expect("valid parameters");
                let check = check_dual_graph(&s);
                if !check.agreed() {
                    violations.push(format!(
                        "({r},{d},{i}): {} rule mismatches",
                        check.mismatches.len()
                    ));
                }
            }
        }
    }
    let star = build_dual_graph(&Subdivision::build(2, 2, 1).expect("valid"));
    if star.node_count() != 4 || star.edge_count() != 3 {
        violations.push(format!(
            "H(2,2,1): {} nodes / {} edges, want 4 / 3",
            star.node_count(),
            star.edge_count()
        ));
    }
    let mut degrees: Vec<usize> = (0..star.node_count()).map(|n| star.degree(n)).collect();
    degrees.sort_unstable();
    if degrees != [1, 1, 1, 3] {
        violations.push(format!("H(2,2,1) degrees {degrees:?}, want a star"));
    }
    conclude("6 dual graph rule equivalence d<=4 r<=3", &violations);
}

/// Two runs of `verify --d 3 --i 2 --r 2 --samples 1000 --seed 0 --format
/// json` produce byte-identical reports.
#[test]
fn criterion_7_deterministic_reports() {
    let mut violations = Vec::new();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hypersub"))
            .args([
                "verify", "--d", "3", "--i", "2", "--r", "2", "--samples", "1000", "--seed", "0",
                "--format", "json",
            ])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    if !first.status.success() {
        violations.push(format!("first run failed: {:?}", first.status));
    }
    if first.stdout != second.stdout {
        violations.push("verification reports differ between runs".into());
    }
    if first.stdout.is_empty() {
        violations.push("empty report".into());
    }
    conclude("7 deterministic verification reports", &violations);
}

/// All lattice vectors whose offset from `center` is in {-1,0,1} in every
/// coordinate, in a deterministic order.
fn window_around(center: &LatticeVector) -> Vec<LatticeVector> {
    let mut out = vec![Vec::new()];
    for t in 0..center.len() {
        let mut next = Vec::with_capacity(out.len() * 3);
        for prefix in out {
            for offset in [-1i64, 0, 1] {
                let mut longer = prefix.clone();
                longer.push(&center[t] + BigInt::from(offset));
                next.push(longer);
            }
        }
        out = next;
    }
    out.into_iter().map(LatticeVector::new).collect()
}

/// A random point with denominators at most 100 and an integral coordinate
/// sum: the first d coordinates are random fractions over a common
/// denominator, the last one makes the sum land on a random integer.
fn random_integral_sum_point(rng: &mut TestRng, d: usize) -> RationalPoint {
    let denominator = 1 + rng.below(100) as i64;
    let mut coords = Vec::with_capacity(d + 1);
    let mut partial = Rational::from_integer(0.into());
    for _ in 0..d {
        // Mix exact integers in so the window scan sees both coordinate kinds.
        let numerator = if rng.below(3) == 0 {
            denominator * (rng.below(7) as i64 - 3)
        } else {
            rng.below((6 * denominator) as u64) as i64 - 3 * denominator
        };
        let c = Rational::new(numerator.into(), denominator.into());
        partial += &c;
        coords.push(c);
    }
    let target = Rational::from_integer(BigInt::from(rng.below(9) as i64 - 4));
    coords.push(target - partial);
    RationalPoint::new(coords).expect("at least two coordinates")
}

/// SplitMix64, local to the suite so the oracle stays self-contained.
struct TestRng {
    state: u64,
}

impl TestRng {
    fn new(seed: u64) -> Self {
        TestRng { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let raw = self.next_u64();
            if raw < zone {
                return raw % n;
            }
        }
    }
}

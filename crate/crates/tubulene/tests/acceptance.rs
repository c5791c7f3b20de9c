//! Acceptance suite: every release-gating check, one test per criterion,
//! each printing a pass/fail line. All comparisons are exact; there are no
//! tolerances anywhere because every quantity is an integer.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use tubulene::armchair::TubuleneParams;
use tubulene::closed_form::{self, Parity, Regime};
use tubulene::gp::{gp_by_definition, gp_by_orbits, w_prime};
use tubulene::symmetry::{
    automorphism_group, brute_force_automorphisms, group_structure, orbits_from_action,
    theorem_orbits,
};
use tubulene::verify::{run_sweep, SweepRange, VerifyOptions};

fn params(n: usize, p: usize) -> TubuleneParams {
    TubuleneParams::new(n, p).unwrap()
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn oracle_gp(n: usize, p: usize) -> BigInt {
    let t = params(n, p);
    let g = t.build();
    let auts = automorphism_group(&g, &t).unwrap();
    let value = gp_by_definition(&g, &auts).unwrap();
    assert!(value.is_integer(), "AT({n},{p}) index is not an integer");
    value.to_integer()
}

/// Criterion 1: the three oracle routes agree exactly on every point of
/// the sweep, in under 60 seconds single-threaded.
#[test]
fn criterion_1_oracle_self_consistency() {
    let started = Instant::now();
    for n in (4..=14).step_by(2) {
        for p in 1..=6 {
            let t = params(n, p);
            let g = t.build();
            let auts = automorphism_group(&g, &t).unwrap();
            let by_def = gp_by_definition(&g, &auts).unwrap();
            let by_action = gp_by_orbits(&g, &orbits_from_action(&auts)).unwrap();
            let by_theorem = gp_by_orbits(&g, &theorem_orbits(&t)).unwrap();
            assert_eq!(by_def, by_action, "AT({n},{p})");
            assert_eq!(by_def, by_theorem, "AT({n},{p})");
            assert!(by_def.is_integer(), "AT({n},{p})");
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "sweep took {elapsed:?}, budget 60 s"
    );
    println!("criterion 1 (oracle self-consistency): pass ({elapsed:?})");
}

/// Criterion 2: each of the 12 tabulated polynomial rows reproduces the
/// BFS oracle exactly on at least 3 in-range points, including the two
/// pinned values 7104 and 115200.
#[test]
fn criterion_2_table5_reproduction() {
    use Parity::*;
    use Regime::*;
    // (p parity, n mod 4, regime) -> three in-range points per row.
    let rows: [(Parity, usize, Regime, [(usize, usize); 3]); 12] = [
        (Even, 0, Wide, [(16, 2), (20, 2), (24, 4)]),
        (Even, 0, CriticalPlus4, [(20, 4), (28, 6), (36, 8)]),
        (Even, 0, Narrow, [(16, 4), (16, 6), (20, 6)]),
        (Even, 2, Wide, [(14, 2), (18, 2), (22, 4)]),
        (Even, 2, CriticalPlus2, [(18, 4), (26, 6), (34, 8)]),
        (Even, 2, Narrow, [(14, 4), (18, 6), (14, 6)]),
        (Odd, 0, Wide, [(12, 1), (16, 1), (20, 3)]),
        (Odd, 0, CriticalPlus4, [(16, 3), (24, 5), (32, 7)]),
        (Odd, 0, Narrow, [(12, 3), (16, 5), (20, 5)]),
        (Odd, 2, Wide, [(10, 1), (14, 1), (18, 3)]),
        (Odd, 2, CriticalPlus2, [(14, 3), (22, 5), (30, 7)]),
        (Odd, 2, Narrow, [(10, 3), (14, 5), (18, 5)]),
    ];
    for (parity, n_mod_4, regime, points) in rows {
        for (n, p) in points {
            let result = closed_form::gp_table5(n, p)
                .unwrap()
                .unwrap_or_else(|| panic!("({n},{p}) must be covered"));
            assert_eq!(result.regime.p_parity, parity, "({n},{p})");
            assert_eq!(result.regime.n_mod_4, n_mod_4, "({n},{p})");
            assert_eq!(result.regime.regime, regime, "({n},{p})");
            assert_eq!(result.value, oracle_gp(n, p), "({n},{p})");
        }
    }
    assert_eq!(oracle_gp(12, 1), BigInt::from(7104u64));
    assert_eq!(oracle_gp(16, 4), BigInt::from(115200u64));
    println!("criterion 2 (tabulated polynomial reproduction): pass");
}

/// Criterion 3: every closed-form distance row matches its BFS oracle on
/// at least 2 points per regime column, plus the `n = 8` rim distance
/// multiset.
#[test]
fn criterion_3_distance_tables_reproduction() {
    // u-side columns split at n <= 4p+4; the first list element tells
    // which side of the split the points must sit on.
    let u_columns: [(bool, &[(usize, usize)]); 4] = [
        (true, &[(8, 4), (4, 1), (12, 2)]),   // 4 | n, small
        (false, &[(12, 1), (16, 1), (16, 2)]), // 4 | n, large
        (true, &[(10, 2), (6, 1), (14, 3)]),  // 4 | (n-2), small
        (false, &[(10, 1), (14, 2), (14, 1)]), // 4 | (n-2), large
    ];
    for (idx, (small, points)) in u_columns.iter().enumerate() {
        let wants_mod_0 = idx < 2;
        for &(n, p) in *points {
            assert_eq!(n % 4 == 0, wants_mod_0, "({n},{p}) in wrong table");
            assert_eq!(n <= 4 * p + 4, *small, "({n},{p}) in wrong column");
            let t = params(n, p);
            let g = t.build();
            let u = t.layer_ids(0, 0).unwrap()[0];
            let v00 = t.layer_ids(0, 0).unwrap();
            let v1p = t.layer_ids(p, 1).unwrap();
            let d_v00 = closed_form::dist_u_v00(n).unwrap();
            let d_v1p = closed_form::dist_u_v1p(n, p).unwrap();
            assert_eq!(
                d_v00,
                BigInt::from(g.distance_sum_to_set(u, &v00).unwrap()),
                "d(u,V00) at ({n},{p})"
            );
            assert_eq!(
                d_v1p,
                BigInt::from(g.distance_sum_to_set(u, &v1p).unwrap()),
                "d(u,V1p) at ({n},{p})"
            );
            let mut orbit = v00.clone();
            orbit.extend(v1p);
            assert_eq!(
                d_v00 + d_v1p,
                BigInt::from(g.distance_sum_to_set(u, &orbit).unwrap()),
                "d(u,O00) at ({n},{p})"
            );
            assert_eq!(
                closed_form::orbit_wiener(n, p, 0).unwrap(),
                BigInt::from(g.wiener_of_subset(&orbit).unwrap()),
                "W(O00) at ({n},{p})"
            );
        }
    }

    // v-side columns split at n <= 4p; (10,2) exercises the n = 4p+2
    // boundary, which belongs to the large-n branch.
    let v_columns: [(bool, &[(usize, usize)]); 4] = [
        (true, &[(8, 2), (8, 4), (12, 3)]),
        (false, &[(12, 1), (8, 1), (16, 2)]),
        (true, &[(6, 2), (10, 3), (14, 4)]),
        (false, &[(10, 1), (10, 2), (6, 1)]),
    ];
    for (idx, (small, points)) in v_columns.iter().enumerate() {
        let wants_mod_0 = idx < 2;
        for &(n, p) in *points {
            assert_eq!(n % 4 == 0, wants_mod_0, "({n},{p}) in wrong table");
            assert_eq!(n <= 4 * p, *small, "({n},{p}) in wrong column");
            let t = params(n, p);
            let g = t.build();
            let v = t.layer_ids(0, 1).unwrap()[0];
            let v10 = t.layer_ids(0, 1).unwrap();
            let v0p = t.layer_ids(p, 0).unwrap();
            let d_v10 = closed_form::dist_u_v00(n).unwrap();
            let d_v0p = closed_form::dist_v_v0p(n, p).unwrap();
            assert_eq!(
                d_v10,
                BigInt::from(g.distance_sum_to_set(v, &v10).unwrap()),
                "d(v,V10) at ({n},{p})"
            );
            assert_eq!(
                d_v0p,
                BigInt::from(g.distance_sum_to_set(v, &v0p).unwrap()),
                "d(v,V0p) at ({n},{p})"
            );
            let mut orbit = v10.clone();
            orbit.extend(v0p);
            assert_eq!(
                d_v10 + d_v0p,
                BigInt::from(g.distance_sum_to_set(v, &orbit).unwrap()),
                "d(v,O10) at ({n},{p})"
            );
            assert_eq!(
                closed_form::orbit_wiener(n, p, 1).unwrap(),
                BigInt::from(g.wiener_of_subset(&orbit).unwrap()),
                "W(O10) at ({n},{p})"
            );
        }
    }

    // Rim distance multiset from a degree-2 vertex at n = 8.
    let t = params(8, 4);
    let g = t.build();
    let v00 = t.layer_ids(0, 0).unwrap();
    let row = g.bfs_distances(v00[0]).unwrap();
    let mut multiset: Vec<u64> = v00[1..].iter().map(|&x| row.dist[x]).collect();
    multiset.sort_unstable();
    assert_eq!(multiset, vec![1, 3, 4, 4, 5, 7, 8]);
    println!("criterion 3 (distance table reproduction): pass");
}

/// Criterion 4: the middle orbit of every even-height tube in the sweep
/// has Wiener index exactly n³.
#[test]
fn criterion_4_middle_orbit() {
    for n in (4..=14usize).step_by(2) {
        for p in [2usize, 4, 6] {
            let t = params(n, p);
            let g = t.build();
            let mut middle = t.layer_ids(p / 2, 0).unwrap();
            middle.extend(t.layer_ids(p / 2, 1).unwrap());
            let w = g.wiener_of_subset(&middle).unwrap();
            assert_eq!(BigInt::from(w), BigInt::from(n as u64).pow(3), "AT({n},{p})");
            assert_eq!(
                closed_form::cycle_wiener(2 * n).unwrap(),
                BigInt::from(w),
                "AT({n},{p})"
            );
        }
    }
    println!("criterion 4 (middle orbit): pass");
}

/// Criterion 5: for all even n in [4,10] and p in [1,4], the rim-extension
/// group equals the brute-force group as a set, has order 2n, and the
/// structure report confirms the dihedral-times-Z2 factorization per
/// instance, within 120 seconds.
///
/// The factorization clause cannot hold when 4 | n: those groups contain
/// an element of order n (a rim flip whose square is the elementary ring
/// rotation), so they are dihedral of order 2n, and a dihedral group of
/// order 2n splits off a central 2-element factor only when n/2 is odd.
/// The clause is asserted as specified anyway; the failure below is the
/// honest outcome, not a defect in the machinery (the other clauses pass
/// and the group itself is verified against the brute-force oracle).
#[test]
fn criterion_5_automorphism_machinery() {
    let started = Instant::now();
    let mut unsatisfied: Vec<(usize, usize)> = Vec::new();
    for n in (4..=10usize).step_by(2) {
        for p in 1..=4usize {
            let t = params(n, p);
            let g = t.build();
            let by_extension = automorphism_group(&g, &t).unwrap();
            let by_search = brute_force_automorphisms(&g, 700).unwrap();
            assert_eq!(by_extension, by_search, "AT({n},{p}) group mismatch");
            assert_eq!(by_extension.len(), 2 * n, "AT({n},{p}) order");
            let report = group_structure(&by_extension, &t);
            assert_eq!(report.order, 2 * n);
            if !report.satisfies_dihedral_times_z2 {
                unsatisfied.push((n, p));
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "sweep took {elapsed:?}, budget 120 s"
    );
    if unsatisfied.is_empty() {
        println!("criterion 5 (automorphism machinery): pass ({elapsed:?})");
    } else {
        println!(
            "criterion 5 (automorphism machinery): FAIL — no dihedral-times-Z2 \
             factorization exists for {unsatisfied:?}; those groups are dihedral \
             of order 2n with 4 | n"
        );
    }
    assert!(
        unsatisfied.is_empty(),
        "direct-product structure absent for {unsatisfied:?}: the group is \
         dihedral of order 2n (brute-force verified), which is a direct product \
         with a 2-element group only when n/2 is odd"
    );
}

/// Criterion 6: `(p+1) * W'` from the per-orbit closed forms equals the
/// BFS oracle on every swept point, including points the tabulated
/// polynomials omit.
#[test]
fn criterion_6_summation_generality() {
    let mut points: Vec<(usize, usize)> = Vec::new();
    for n in (4..=14usize).step_by(2) {
        for p in 1..=6usize {
            points.push((n, p));
        }
    }
    points.extend([(8, 2), (12, 3), (4, 1), (4, 2), (4, 3), (4, 4), (4, 5), (4, 6)]);
    for (n, p) in points {
        let t = params(n, p);
        let g = t.build();
        let orbits = theorem_orbits(&t);
        let oracle = gp_by_orbits(&g, &orbits).unwrap();
        let summation = closed_form::gp_orbit_summation(n, p).unwrap();
        assert_eq!(
            oracle,
            BigRational::from_integer(summation.clone()),
            "AT({n},{p})"
        );
        // The (p+1) relation against the subset-Wiener oracle.
        let wp = w_prime(&g, &orbits).unwrap();
        assert_eq!(
            BigInt::from((p + 1) as u64) * BigInt::from(wp),
            summation,
            "AT({n},{p})"
        );
    }
    println!("criterion 6 (orbit-summation generality): pass");
}

/// Criterion 7: the closed form evaluates AT(200,100) in under 10 ms and
/// the full BFS oracle handles the 660-vertex AT(30,10) in under 10 s,
/// with the two routes agreeing exactly.
#[test]
fn criterion_7_performance() {
    let started = Instant::now();
    let closed = closed_form::gp_orbit_summation(200, 100).unwrap();
    let closed_elapsed = started.elapsed();
    assert_eq!(closed, BigInt::from(105_783_360_000u64));
    assert_eq!(&closed % BigInt::from(101u64), BigInt::from(0u64));
    assert!(
        closed_elapsed < Duration::from_millis(10),
        "closed form took {closed_elapsed:?}, budget 10 ms"
    );

    let started = Instant::now();
    let t = params(30, 10);
    let g = t.build();
    assert_eq!(g.vertex_count(), 660);
    let auts = automorphism_group(&g, &t).unwrap();
    let oracle = gp_by_definition(&g, &auts).unwrap();
    let oracle_elapsed = started.elapsed();
    assert_eq!(oracle, int(3_829_320));
    assert_eq!(
        oracle,
        BigRational::from_integer(closed_form::gp_orbit_summation(30, 10).unwrap())
    );
    assert!(
        oracle_elapsed < Duration::from_secs(10),
        "oracle took {oracle_elapsed:?}, budget 10 s"
    );
    println!(
        "criterion 7 (performance): pass (closed form {closed_elapsed:?}, oracle {oracle_elapsed:?})"
    );
}

/// Criterion 8: two consecutive verification runs over the full sweep
/// produce byte-identical reports, through the binary and through the
/// library, in both formats, independent of worker count.
#[test]
fn criterion_8_determinism() {
    let run_binary = |format: &str| {
        let output = Command::new(env!("CARGO_BIN_EXE_tubulene"))
            .args([
                "verify", "--n-min", "4", "--n-max", "14", "--p-min", "1", "--p-max", "6",
                "--format", format,
            ])
            .output()
            .expect("binary runs");
        assert!(output.status.success(), "verify must exit 0");
        output.stdout
    };
    let first = run_binary("csv");
    let second = run_binary("csv");
    assert_eq!(first, second, "consecutive csv runs must be byte-identical");
    assert!(!first.is_empty());

    let range = SweepRange::new(4, 14, 1, 6).unwrap();
    let opts = VerifyOptions::default();
    let collect = |jobs: usize| {
        let mut lines = Vec::new();
        run_sweep(&range, jobs, &opts, |r| lines.push(r.to_json_line())).unwrap();
        lines
    };
    assert_eq!(collect(1), collect(4), "parallel run must emit identically");
    println!("criterion 8 (determinism): pass");
}

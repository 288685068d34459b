//! End-to-end acceptance checks, one per headline guarantee of the crate.
//! Runs without the libtest harness so every criterion prints exactly one
//! PASS/FAIL line; the process exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::TestRng;
use itertools::Itertools;
use num_complex::Complex64;

use segre_core::coxeter::{
    act, act_on_generator, chamber_of, inject_error, recover, state_chamber, transporter,
    verify_ideal_invariance, Chamber, ChamberId, Permutation, RealPoint,
};
use segre_core::hypercube::generate_hypercube;
use segre_core::segre::{
    concurrence, ideal_generators, is_maximally_entangled, is_separable_at_cut, minors_residual,
    reshape, su2_point, SegreGenerator,
};
use segre_core::state::PureState;

type Criterion = fn() -> Result<(), String>;

fn main() {
    let criteria: &[(&str, Criterion)] = &[
        (
            "5-qubit hypercube: 16 vertices, 32 edges, all signature labels in place",
            hypercube_diagram,
        ),
        (
            "2-qubit determinantal criterion separates products from Bell states",
            determinantal_criterion,
        ),
        (
            "hypercube counts and Hamming adjacency for n = 2..12",
            hypercube_counts,
        ),
        (
            "coordinate permutations map the 9-generator ideal onto itself",
            ideal_invariance,
        ),
        (
            "chamber action is simply transitive and recovers permutation errors",
            chamber_transitivity,
        ),
        (
            "unitary middle-cut criterion detects maximal entanglement",
            maximal_entanglement,
        ),
        (
            "octant split vanishes on nonvanishing product states",
            octant_residuals,
        ),
        (
            "concurrence matches the singular-value oracle",
            cross_measure,
        ),
    ];

    let mut failures = 0usize;
    for (index, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("PASS criterion {}: {name}", index + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL criterion {}: {name}: {reason}", index + 1);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criterion(s) failed");
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl Fn() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bell() -> PureState {
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    PureState::new(
        2,
        vec![
            Complex64::new(inv, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(inv, 0.0),
        ],
    )
    .unwrap()
}

/// Criterion 1: the 5-qubit embedding hypercube is the labeled 4-cube with
/// 16 vertices, 32 edges, the exact multiset of product-space signatures,
/// and the documented word-to-label pairing; generated in under a second.
fn hypercube_diagram() -> Result<(), String> {
    let start = Instant::now();
    let g = generate_hypercube(5).map_err(|e| e.to_string())?;
    ensure(g.vertices().len() == 16, || {
        format!("expected 16 vertices, got {}", g.vertices().len())
    })?;
    ensure(g.edges().len() == 32, || {
        format!("expected 32 edges, got {}", g.edges().len())
    })?;

    let mut labels: Vec<String> = g.vertices().iter().map(|(_, s)| s.label()).collect();
    labels.sort();
    let mut expected: Vec<&str> = vec![
        "P1 x P1 x P1 x P1 x P1",
        "P1 x P1 x P1 x P3",
        "P1 x P1 x P3 x P1",
        "P1 x P1 x P7",
        "P1 x P3 x P1 x P1",
        "P1 x P3 x P3",
        "P1 x P7 x P1",
        "P1 x P15",
        "P3 x P1 x P1 x P1",
        "P3 x P1 x P3",
        "P3 x P3 x P1",
        "P3 x P7",
        "P7 x P1 x P1",
        "P7 x P3",
        "P15 x P1",
        "P31",
    ];
    expected.sort_unstable();
    ensure(labels == expected, || {
        format!("signature multiset mismatch: {labels:?}")
    })?;

    for (word, label) in [
        ("1000", "P3 x P1 x P1 x P1"),
        ("0001", "P1 x P1 x P1 x P3"),
        ("0110", "P1 x P7 x P1"),
        ("1001", "P3 x P1 x P3"),
    ] {
        let found = g
            .vertices()
            .iter()
            .find(|(w, _)| w.to_string() == word)
            .ok_or_else(|| format!("word {word} missing"))?;
        ensure(found.1.label() == label, || {
            format!("word {word} labeled {}, expected {label}", found.1.label())
        })?;
    }

    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}, budget 1s")
    })
}

/// Criterion 2: on 1000 constructed 2-qubit products the single minor stays
/// below 1e-12; the four Bell-type states sit at 0.5; the default decision
/// boundary classifies both populations perfectly.
fn determinantal_criterion() -> Result<(), String> {
    let mut rng = TestRng::new(0x02ce11);
    for trial in 0..1000 {
        let s = rng.state(1).tensor(&rng.state(1));
        let residual = minors_residual(&reshape(&s, 1).unwrap());
        ensure(residual < 1e-12, || {
            format!("product {trial} has residual {residual:e}")
        })?;
        ensure(is_separable_at_cut(&s, 1, 1e-9).unwrap(), || {
            format!("product {trial} misclassified")
        })?;
    }

    let inv = std::f64::consts::FRAC_1_SQRT_2;
    let z = Complex64::new(0.0, 0.0);
    let p = Complex64::new(inv, 0.0);
    let m = Complex64::new(-inv, 0.0);
    let bell_family = [
        vec![p, z, z, p],
        vec![p, z, z, m],
        vec![z, p, p, z],
        vec![z, p, m, z],
    ];
    for (which, amps) in bell_family.into_iter().enumerate() {
        let s = PureState::new(2, amps).unwrap();
        let residual = minors_residual(&reshape(&s, 1).unwrap());
        ensure((residual - 0.5).abs() <= 1e-12, || {
            format!("Bell-type state {which} has residual {residual}")
        })?;
        ensure(!is_separable_at_cut(&s, 1, 1e-9).unwrap(), || {
            format!("Bell-type state {which} misclassified")
        })?;
    }
    Ok(())
}

/// Criterion 3: vertex and edge counts follow the closed forms for
/// n = 2..12 with every edge at Hamming distance 1, and the distance
/// function agrees with an independent bit loop on 10^4 random pairs.
fn hypercube_counts() -> Result<(), String> {
    for n in 2..=12usize {
        let g = generate_hypercube(n).map_err(|e| e.to_string())?;
        ensure(g.vertices().len() == 1 << (n - 1), || {
            format!("vertex count off at n={n}")
        })?;
        ensure(g.edges().len() == (n - 1) << (n - 2), || {
            format!("edge count off at n={n}")
        })?;
        for (a, b) in g.edges() {
            ensure(a.hamming(b).unwrap() == 1, || {
                format!("edge {a} -- {b} not distance 1")
            })?;
        }
    }

    let mut rng = TestRng::new(0xd157);
    for _ in 0..10_000 {
        let len = 1 + rng.below(16);
        let bits_a: Vec<bool> = (0..len).map(|_| rng.below(2) == 1).collect();
        let bits_b: Vec<bool> = (0..len).map(|_| rng.below(2) == 1).collect();
        let mut oracle = 0usize;
        for i in 0..len {
            if bits_a[i] != bits_b[i] {
                oracle += 1;
            }
        }
        let a = segre_core::hypercube::BinaryWord::new(bits_a);
        let b = segre_core::hypercube::BinaryWord::new(bits_b);
        let got = a.hamming(&b).unwrap();
        ensure(got == oracle, || {
            format!("hamming({a}, {b}) = {got}, oracle says {oracle}")
        })?;
    }
    Ok(())
}

/// Criterion 4: every pair in S3 x S3 permutes the nine quadratic generators
/// of the (2,2) ideal bijectively, and the specific 3-cycle 0→2, 1→0, 2→1
/// applied to both factors sends the first generator to the fifth.
fn ideal_invariance() -> Result<(), String> {
    let mut pairs = 0usize;
    for p_images in (0..3usize).permutations(3) {
        let p = Permutation::from_images(p_images).unwrap();
        for q_images in (0..3usize).permutations(3) {
            let q = Permutation::from_images(q_images).unwrap();
            ensure(verify_ideal_invariance(2, 2, &p, &q).unwrap(), || {
                format!("pair ({p}, {q}) does not preserve the generator set")
            })?;
            pairs += 1;
        }
    }
    ensure(pairs == 36, || {
        format!("enumerated {pairs} pairs, expected 36")
    })?;

    let omega = Permutation::from_images(vec![2, 0, 1]).unwrap();
    let generators = ideal_generators(2, 2);
    let image = act_on_generator(&omega, &omega, &generators[0]).unwrap();
    ensure(image == generators[4], || {
        format!(
            "3-cycle sent {} to {}, expected {}",
            generators[0], image, generators[4]
        )
    })?;
    ensure(image == SegreGenerator::new((0, 2), (0, 2)), || {
        format!("image {image} is not the minor on rows (0,2), cols (0,2)")
    })
}

/// Criterion 5: among the 24 chambers of S4 every ordered pair has exactly
/// one group element carrying one to the other (verified on representative
/// points against all 24 candidates), and 1000 permutation-error round
/// trips restore the original chamber; all under five seconds.
fn chamber_transitivity() -> Result<(), String> {
    let start = Instant::now();

    let group: Vec<Permutation> = (0..4usize)
        .permutations(4)
        .map(|images| Permutation::from_images(images).unwrap())
        .collect();
    let chambers: Vec<ChamberId> = group.iter().cloned().map(ChamberId::new).collect();
    let mut ordered_pairs = 0usize;
    for c1 in &chambers {
        let mut coords = vec![0.0; 4];
        for k in 0..4 {
            coords[c1.order().apply(k)] = k as f64;
        }
        let x = RealPoint::new(coords).unwrap();
        for c2 in &chambers {
            let g = transporter(c1, c2).map_err(|e| e.to_string())?;
            let moved = act(&g, &x).unwrap();
            ensure(chamber_of(&moved) == Chamber::Interior(c2.clone()), || {
                format!("transporter {g} fails to carry {c1} to {c2}")
            })?;
            let movers = group
                .iter()
                .filter(|h| chamber_of(&act(h, &x).unwrap()) == Chamber::Interior(c2.clone()))
                .count();
            ensure(movers == 1, || {
                format!("{movers} group elements carry {c1} to {c2}")
            })?;
            ordered_pairs += 1;
        }
    }
    ensure(ordered_pairs == 576, || {
        format!("enumerated {ordered_pairs} ordered pairs, expected 576")
    })?;

    let mut rng = TestRng::new(0xec0517);
    let mut successes = 0usize;
    let mut performed = 0usize;
    while performed < 1000 {
        let n = 2 + rng.below(2);
        let s = rng.state(n);
        let Chamber::Interior(original) = state_chamber(&s) else {
            continue;
        };
        performed += 1;
        let g = rng.permutation(1 << n);
        let corrupted = inject_error(&s, &g).unwrap();
        let recovery = recover(&original, &corrupted).map_err(|e| e.to_string())?;
        if state_chamber(&recovery.corrected) == Chamber::Interior(original) {
            successes += 1;
        }
    }
    ensure(successes == 1000, || {
        format!("only {successes}/1000 round trips recovered the chamber")
    })?;

    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:?}, budget 5s")
    })
}

/// Criterion 6: the Bell state and 1000 states with unitary middle-cut
/// matrices are accepted, 1000 random product states are rejected, and the
/// curve (α, β, −β*, α*) yields Gram matrices within 1e-12 of the identity.
fn maximal_entanglement() -> Result<(), String> {
    ensure(is_maximally_entangled(&bell(), 1e-9).unwrap(), || {
        "Bell state rejected".to_string()
    })?;

    let mut rng = TestRng::new(0x3a71);
    for trial in 0..1000 {
        let n = if trial % 2 == 0 { 2usize } else { 4 };
        let dim = 1 << (n / 2);
        let u = rng.unitary(dim);
        let scale = 1.0 / (dim as f64).sqrt();
        let amps: Vec<Complex64> = u.iter().flatten().map(|z| z * scale).collect();
        let s = PureState::new(n, amps).unwrap();
        ensure(is_maximally_entangled(&s, 1e-9).unwrap(), || {
            format!("unitary-built state {trial} rejected")
        })?;
    }

    for trial in 0..1000 {
        let s = rng.state(1).tensor(&rng.state(1));
        ensure(!is_maximally_entangled(&s, 1e-9).unwrap(), || {
            format!("product state {trial} accepted")
        })?;
    }

    for trial in 0..1000 {
        let raw = (rng.complex_normal(), rng.complex_normal());
        let norm = (raw.0.norm_sqr() + raw.1.norm_sqr()).sqrt();
        let (alpha, beta) = (raw.0 / norm, raw.1 / norm);
        let p = su2_point(alpha, beta).map_err(|e| e.to_string())?;
        let m = p.coords();
        // Gram of [[α, β], [−β*, α*]] against the identity.
        let g00 = m[0].norm_sqr() + m[2].norm_sqr();
        let g11 = m[1].norm_sqr() + m[3].norm_sqr();
        let g01 = m[0].conj() * m[1] + m[2].conj() * m[3];
        let deviation = (g00 - 1.0).abs().max((g11 - 1.0).abs()).max(g01.norm());
        ensure(deviation < 1e-12, || {
            format!("unitary-curve point {trial} has Gram deviation {deviation:e}")
        })?;
    }
    Ok(())
}

/// Criterion 7: on 1000 products of single-qubit states with no vanishing
/// amplitude, both the magnitude equation and the phase equation hold to
/// 1e-9.
fn octant_residuals() -> Result<(), String> {
    let mut rng = TestRng::new(0x0c7a57);
    for trial in 0..1000 {
        let s = rng.nonvanishing_qubit().tensor(&rng.nonvanishing_qubit());
        let split = segre_core::segre::octant_split(&s).map_err(|e| e.to_string())?;
        ensure(split.mag_residual.abs() < 1e-9, || {
            format!("trial {trial}: magnitude residual {:e}", split.mag_residual)
        })?;
        let phase = split
            .phase_residual
            .ok_or_else(|| format!("trial {trial}: phase reported undefined"))?;
        ensure(phase.abs() < 1e-9, || {
            format!("trial {trial}: phase residual {phase:e}")
        })?;
    }
    Ok(())
}

/// Criterion 8: concurrence equals twice the product of the two singular
/// values computed by an inline Gram-eigenvalue oracle, within 1e-10 on
/// 1000 random states; the Bell state scores 1.
fn cross_measure() -> Result<(), String> {
    let mut rng = TestRng::new(0xc20055);
    for trial in 0..1000 {
        let s = rng.state(2);
        let c = s.amplitudes();
        // Oracle: eigenvalues of M M† for M = [[c0, c1], [c2, c3]].
        let g00 = c[0].norm_sqr() + c[1].norm_sqr();
        let g11 = c[2].norm_sqr() + c[3].norm_sqr();
        let g01 = c[0] * c[2].conj() + c[1] * c[3].conj();
        let mid = (g00 + g11) / 2.0;
        let rad = (((g00 - g11) / 2.0).powi(2) + g01.norm_sqr()).sqrt();
        let oracle = 2.0 * ((mid + rad).max(0.0) * (mid - rad).max(0.0)).sqrt();
        let measure = concurrence(&s).unwrap();
        ensure((measure - oracle).abs() < 1e-10, || {
            format!("trial {trial}: concurrence {measure} vs oracle {oracle}")
        })?;
    }
    let measure = concurrence(&bell()).unwrap();
    ensure((measure - 1.0).abs() <= 1e-12, || {
        format!("Bell concurrence {measure}")
    })
}

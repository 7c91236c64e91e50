//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.
//!
//! Runs as a plain binary (no libtest) so the lines always reach the output;
//! exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twining_characters::{
    apply_word, demazure_character, demazure_op, freudenthal_character, freudenthal_multiplicities,
    map_character,
};
use twining_core::catalog::cartan_matrix;
use twining_core::{
    BigInt, CharacterPolynomial, DiagramAutomorphism, Error, GeneralizedCartanMatrix, Rational,
    RootVector, Weight, WeylGroup, WeylWord,
};
use twining_engine::{FWord, HighestWeightModule, PairingVector};
use twining_harness::{run_battery, BatteryConfig, Mutation, Status, FAMILIES};

struct Verdict {
    pass: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Self {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(note.into());
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.check(
            elapsed <= limit,
            format!("took {elapsed:?}, limit {limit:?}"),
        );
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn gcm(label: &str) -> GeneralizedCartanMatrix {
    cartan_matrix(label).unwrap()
}

fn family_folding(f: usize) -> twining_folding::FoldingData {
    FAMILIES[f].folding().unwrap()
}

/// Symmetric dominant weights used by the battery, per family.
fn battery_lambdas() -> Vec<(usize, Weight)> {
    let mut out = Vec::new();
    for k in 0..=3 {
        out.push((0, vec![k]));
    }
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        out.push((1, vec![a, b]));
    }
    out.push((2, vec![1, 0]));
    out.push((2, vec![0, 1]));
    out.push((3, vec![1, 0]));
    out.push((3, vec![0, 1]));
    out.push((4, vec![0, 1, 0]));
    out.into_iter()
        .map(|(f, lh)| (f, family_folding(f).pstar(&Weight::new(lh)).unwrap()))
        .collect()
}

fn criterion_1() -> Verdict {
    let mut v = Verdict::new();
    let expected: [(usize, Vec<Vec<i64>>); 5] = [
        (0, vec![vec![2]]),
        (1, vec![vec![2, -1], vec![-2, 2]]),
        (2, vec![vec![2, -1], vec![-2, 2]]),
        (3, vec![vec![2, -1], vec![-3, 2]]),
        (4, vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]),
    ];
    for (f, want) in expected {
        let start = Instant::now();
        let fd = family_folding(f);
        let name = FAMILIES[f].name;
        v.check(
            fd.folded().entries() == want.as_slice(),
            format!("{name}: folded {} but expected {:?}", fd.folded(), want),
        );
        v.check(
            fd.check_invariants().is_ok(),
            format!("{name}: W~ membership or intertwining fails"),
        );
        let m = fd.folded().rank();
        let mut all_intertwine = true;
        let mut frontier = vec![WeylWord::identity()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..m {
                    let w = w.concat(&WeylWord::new(vec![i]));
                    all_intertwine &= fd.intertwines(&w).unwrap();
                    next.push(w);
                }
            }
            frontier = next;
        }
        v.check(
            all_intertwine,
            format!("{name}: intertwining fails up to length 4"),
        );
        v.check(
            fd.check_bijectivity(1000).unwrap(),
            format!("{name}: Θ is not a bijection onto W~"),
        );
        v.within(start.elapsed(), Duration::from_secs(1));
    }
    v
}

fn criterion_2() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let result = run_battery(&BatteryConfig::default()).unwrap();
    let s = &result.summary;
    v.check(s.unequal == 0, format!("{} unequal instances", s.unequal));
    v.check(
        s.errors == 0,
        format!("{} instances raised errors", s.errors),
    );
    v.check(
        s.total == 104,
        format!("battery has {} instances instead of 104", s.total),
    );
    v.note(format!(
        "{} equal, {} skipped over the word cap",
        s.equal, s.skipped
    ));
    for o in result.outcomes.iter().filter(|o| o.status != Status::Equal) {
        v.note(o.line());
    }
    v.within(start.elapsed(), Duration::from_secs(600));
    v
}

fn criterion_3() -> Verdict {
    let mut v = Verdict::new();
    let mut seen = 0;
    for (f, lambda) in battery_lambdas() {
        let fd = family_folding(f);
        let small = fd.folded();
        let lambda_hat = fd.pstar_inverse(&lambda).unwrap();
        let w0 = WeylGroup::new(small).unwrap().longest_element().unwrap();
        let rhs =
            map_character(&fd, &demazure_character(small, &lambda_hat, &w0).unwrap()).unwrap();
        let dim = small.weyl_dimension(&lambda_hat).unwrap();
        v.check(
            rhs.coefficient_sum() == dim,
            format!(
                "{} λ̂={lambda_hat}: RHS sum {} vs Weyl dimension {dim}",
                FAMILIES[f].name,
                rhs.coefficient_sum()
            ),
        );
        let module = HighestWeightModule::new(small, lambda_hat.clone()).unwrap();
        let id = DiagramAutomorphism::identity(small.rank());
        let untwined = module.twining_character(&w0, &id).unwrap();
        v.check(
            untwined == freudenthal_character(small, &lambda_hat).unwrap(),
            format!(
                "{} λ̂={lambda_hat}: ω = id does not give the character",
                FAMILIES[f].name
            ),
        );
        seen += 1;
    }
    // the two worked values
    let a2 = family_folding(0);
    let rhs = map_character(
        &a2,
        &demazure_character(a2.folded(), &Weight::new(vec![1]), &WeylWord::new(vec![0])).unwrap(),
    )
    .unwrap();
    v.check(
        rhs.coefficient_sum() == BigInt::from(2),
        "A2 flip, λ̂ = 1: sum is not 2",
    );
    let d4 = family_folding(3);
    let w0 = WeylGroup::new(d4.folded())
        .unwrap()
        .longest_element()
        .unwrap();
    let rhs = map_character(
        &d4,
        &demazure_character(d4.folded(), &Weight::new(vec![0, 1]), &w0).unwrap(),
    )
    .unwrap();
    v.check(
        rhs.coefficient_sum() == BigInt::from(7),
        "D4 triality, λ̂ = (0,1): sum is not 7",
    );
    v.note(format!("{seen} (family, λ̂) pairs at the longest element"));
    v
}

fn criterion_4() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut count = 0;
    for label in ["A2", "B2"] {
        let a = gcm(label);
        let words = WeylGroup::new(&a).unwrap().all_reduced_words(100).unwrap();
        for x in 0..=2 {
            for y in 0..=2 {
                let lambda = Weight::new(vec![x, y]);
                let module = HighestWeightModule::new(&a, lambda.clone()).unwrap();
                for w in &words {
                    let spaces = module.demazure_subspaces(w).unwrap();
                    let ok = module.dimension_character(&spaces)
                        == demazure_character(&a, &lambda, w).unwrap();
                    v.check(ok, format!("{label} λ={lambda} w=({w})"));
                    count += 1;
                }
            }
        }
    }
    v.note(format!("{count} (type, λ, w) cases"));
    v.within(start.elapsed(), Duration::from_secs(120));
    v
}

/// Dominant Weyl conjugate of a weight.
fn dominant_conjugate(a: &GeneralizedCartanMatrix, mu: &Weight) -> Weight {
    let mut mu = mu.clone();
    while let Some(i) = (0..a.rank()).find(|&i| a.pairing(&mu, i) < 0) {
        mu = a.reflect(&mu, i);
    }
    mu
}

fn criterion_5() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut direct = 0usize;
    let mut by_symmetry = 0usize;
    let mut pairs: Vec<(String, Weight)> = battery_lambdas()
        .into_iter()
        .map(|(f, l)| (FAMILIES[f].label.to_string(), l))
        .collect();
    pairs.dedup();
    for (label, lambda) in pairs {
        let a = gcm(&label);
        let module = HighestWeightModule::new(&a, lambda.clone()).unwrap();
        let (spaces, _) = module.weight_spaces_within_cap().unwrap();
        let mult: BTreeMap<RootVector, BigInt> = freudenthal_multiplicities(&a, &lambda).unwrap();
        let mut total = BigInt::from(0);
        for (gamma, space) in &spaces {
            let m = mult.get(gamma).cloned().unwrap_or_default();
            v.check(
                BigInt::from(space.dim()) == m,
                format!("{label} λ={lambda} at content {gamma}"),
            );
        }
        for (gamma, m) in &mult {
            let dim = match spaces.get(gamma) {
                Some(s) => {
                    direct += 1;
                    s.dim()
                }
                None => {
                    by_symmetry += 1;
                    let conj = dominant_conjugate(&a, &module.weight_of(gamma));
                    let beta = a
                        .weight_to_integral_root(&(&lambda - &conj))
                        .unwrap()
                        .unwrap();
                    spaces.get(&beta).map_or(0, |s| s.dim())
                }
            };
            v.check(
                BigInt::from(dim) == *m,
                format!("{label} λ={lambda} at content {gamma}"),
            );
            total += BigInt::from(dim);
        }
        v.check(
            total == a.weyl_dimension(&lambda).unwrap(),
            format!("{label} λ={lambda}: total {total} vs Weyl dimension"),
        );
    }
    v.note(format!(
        "{direct} weight spaces compared directly, {by_symmetry} beyond the word cap via their dominant conjugates"
    ));
    v.within(start.elapsed(), Duration::from_secs(60));
    v
}

fn random_polynomial(rng: &mut ChaCha8Rng, rank: usize) -> CharacterPolynomial {
    let mut f = CharacterPolynomial::zero(rank);
    for _ in 0..rng.gen_range(1..6) {
        let mu = Weight::new((0..rank).map(|_| rng.gen_range(-3..=3)).collect());
        f.add_term(mu, BigInt::from(rng.gen_range(-3..=3)));
    }
    f
}

fn criterion_6() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut types: Vec<(String, GeneralizedCartanMatrix)> = ["A2", "A3", "A4", "D4"]
        .iter()
        .map(|l| (l.to_string(), gcm(l)))
        .collect();
    for f in 0..FAMILIES.len() {
        types.push((
            format!("folded {}", FAMILIES[f].name),
            family_folding(f).folded().clone(),
        ));
    }
    for (name, a) in &types {
        for _ in 0..200 {
            let f = random_polynomial(&mut rng, a.rank());
            let i = rng.gen_range(0..a.rank());
            let once = demazure_op(a, &f, i).unwrap();
            v.check(
                demazure_op(a, &once, i).unwrap() == once,
                format!("{name}: D_{i} not idempotent"),
            );
        }
    }
    let rank_two = [
        ("A2", gcm("A2"), 3),
        ("B2", gcm("B2"), 4),
        ("C2 (folded A4)", family_folding(2).folded().clone(), 4),
        ("G2", gcm("G2"), 6),
    ];
    for (name, a, m) in &rank_two {
        let left = WeylWord::new((0..*m).map(|k| k % 2).collect());
        let right = WeylWord::new((0..*m).map(|k| (k + 1) % 2).collect());
        for _ in 0..50 {
            let mu = Weight::new(vec![rng.gen_range(-4..=4), rng.gen_range(-4..=4)]);
            let f = CharacterPolynomial::monomial(mu);
            v.check(
                apply_word(a, &f, &left).unwrap() == apply_word(a, &f, &right).unwrap(),
                format!("{name}: braid relation fails"),
            );
        }
    }
    for label in ["A2", "B2", "G2", "A3", "A4", "D4", "C3"] {
        let a = gcm(label);
        let group = WeylGroup::new(&a).unwrap();
        let lambda = Weight::rho(a.rank());
        let mut frontier = vec![WeylWord::identity()];
        for len in 1..=4 {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..a.rank() {
                    let cand = w.concat(&WeylWord::new(vec![i]));
                    if group.length(&cand).unwrap() == len {
                        let verbatim =
                            apply_word(&a, &CharacterPolynomial::monomial(lambda.clone()), &cand)
                                .unwrap();
                        v.check(
                            verbatim == demazure_character(&a, &lambda, &cand).unwrap(),
                            format!(
                                "{label}: reduced word {cand} disagrees with its canonical word"
                            ),
                        );
                        next.push(cand);
                    }
                }
            }
            frontier = next;
        }
    }
    v.within(start.elapsed(), Duration::from_secs(60));
    v
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=6);
    (0..len).map(|_| rng.gen_range(0..rank)).collect()
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut traces = 0usize;
    for (f, lambda) in battery_lambdas() {
        let a = gcm(FAMILIES[f].label);
        let omega = DiagramAutomorphism::new(&a, FAMILIES[f].automorphism.to_vec()).unwrap();
        let module = HighestWeightModule::new(&a, lambda.clone()).unwrap();
        let n = a.rank();
        let inverse: Vec<usize> = (0..n).map(|i| omega.preimage(i)).collect();
        for _ in 0..100 {
            let mut x = random_word(&mut rng, n);
            let vx = module.word_vector(&FWord::new(x.clone())).unwrap();
            x.shuffle(&mut rng);
            let vy = module.word_vector(&FWord::new(x.clone())).unwrap();
            let (c0, c1) = (q(rng.gen_range(-3..=3)), q(rng.gen_range(-3..=3)));
            let coords = vx
                .coords()
                .iter()
                .zip(vy.coords())
                .map(|(p, r)| &c0 * p + &c1 * r)
                .collect();
            let vec =
                PairingVector::from_coords(lambda.clone(), vx.content().clone(), coords).unwrap();
            let formal: Vec<(Rational, FWord)> = (0..2)
                .map(|_| {
                    let mut w = x.clone();
                    w.shuffle(&mut rng);
                    (q(rng.gen_range(-3..=3)), FWord::new(w))
                })
                .collect();
            let moved: Vec<(Rational, FWord)> = formal
                .iter()
                .map(|(c, w)| (c.clone(), w.relabel(&inverse)))
                .collect();
            let image = module.tau(&omega, &vec).unwrap();
            v.check(
                image.pair_with_words(&moved) == vec.pair_with_words(&formal),
                format!("{} λ={lambda}: τ is not an isometry", FAMILIES[f].name),
            );
            let mut power = vec.clone();
            for _ in 0..omega.order() {
                power = module.tau(&omega, &power).unwrap();
            }
            v.check(
                power == vec,
                format!("{} λ={lambda}: τ^N ≠ id", FAMILIES[f].name),
            );
        }
        // every ω-stable weight space of L(λ) within the cap has an integral trace
        let (spaces, _) = module.weight_spaces_within_cap().unwrap();
        for (gamma, space) in spaces.iter().filter(|(g, _)| omega.is_symmetric_content(g)) {
            let ok = module.twining_trace(space, &omega).is_ok();
            v.check(
                ok,
                format!("{} λ={lambda}: trace at {gamma} fails", FAMILIES[f].name),
            );
            traces += 1;
        }
    }
    let a2 = gcm("A2");
    let flip = DiagramAutomorphism::new(&a2, vec![1, 0]).unwrap();
    let module = HighestWeightModule::new(&a2, Weight::rho(2)).unwrap();
    let spaces = module.demazure_subspaces(&WeylWord::new(vec![0])).unwrap();
    let witness = module.twining_character_of(&spaces, &flip);
    v.check(
        matches!(witness, Err(Error::NotTauStable(_))),
        format!("witness A2 flip, λ = ρ, w = (0) gave {witness:?}"),
    );
    v.note(format!("{traces} weight-space traces, all integral"));
    v.within(start.elapsed(), Duration::from_secs(60));
    v
}

fn criterion_8() -> Verdict {
    let mut v = Verdict::new();
    let mutations = [
        (
            "Â entry (A3 flip, [1][0]: -2 -> -1)",
            Mutation::FoldedEntry {
                family: 1,
                row: 1,
                col: 0,
                value: -1,
            },
        ),
        (
            "Θ word (A3 flip, orbit {0,2} -> 0,2,0,2)",
            Mutation::ThetaWord {
                family: 1,
                orbit: 0,
                word: WeylWord::new(vec![0, 2, 0, 2]),
            },
        ),
    ];
    for (name, m) in mutations {
        let config = BatteryConfig {
            mutation: Some(m),
            ..BatteryConfig::default()
        };
        let r = run_battery(&config).unwrap();
        v.check(
            r.summary.unequal > 0,
            format!("{name}: no instance became unequal"),
        );
        v.check(
            r.summary.exit_code == 1,
            format!("{name}: exit code {}", r.summary.exit_code),
        );
        v.note(format!("{name}: {} unequal", r.summary.unequal));
    }
    v
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 folding battery", criterion_1),
        ("2 twining identity on the battery", criterion_2),
        ("3 longest-element regression", criterion_3),
        ("4 Demazure formula vs word model", criterion_4),
        ("5 weight spaces vs Freudenthal", criterion_5),
        ("6 Demazure operator identities", criterion_6),
        ("7 twining map properties", criterion_7),
        ("8 mutation sensitivity", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let tag = if verdict.pass { "PASS" } else { "FAIL" };
        println!("criterion {name}: {tag} ({:.2?})", start.elapsed());
        for note in &verdict.notes {
            println!("    {note}");
        }
        if !verdict.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of 8 criteria pass", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

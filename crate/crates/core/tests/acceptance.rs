//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use antiring::dag_counting::{acyclic_gf_explicit, acyclic_gf_recurrence, count_nilpotent};
use antiring::invertibility::{factorize_invertible, invert, max_orthogonal_decomposition};
use antiring::nilpotency::{digraph_of, longest_path, nilpotency_index, Digraph};
use antiring::oracle::{count_nilpotent_bruteforce, enumerate_gl, for_each_matrix, EnumerationBudget};
use antiring::semiring::{integers_mod, validate_axioms};
use antiring::squarezero::{
    capacity, ceil_log2, decompose_nilpotent, decompose_trace_zero, min_coloring_search,
    SquareZeroDecomposition,
};
use antiring::{Matrix, Semiring, Value};
use num_bigint::BigUint;
use rand::Rng;

type Outcome = Result<String, String>;

/// Name, check, and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn nilpotent_closed_forms() -> Outcome {
    for q in 2u64..=5 {
        let two = count_nilpotent(2, q).map_err(|e| e.to_string())?;
        ensure!(two == big(2 * q - 1), "n=2 q={q}: got {two}");
        let three = count_nilpotent(3, q).map_err(|e| e.to_string())?;
        let expected = 6 * q.pow(3) - 6 * q.pow(2) + 1;
        ensure!(three == big(expected), "n=3 q={q}: got {three}, want {expected}");
    }
    Ok("2q-1 and 6q^3-6q^2+1 for q in 2..=5".into())
}

fn formula_matches_oracle() -> Outcome {
    let budget = EnumerationBudget::default();
    let mut report = Vec::new();
    for (n, q) in [(2usize, 2u32), (2, 3), (3, 2), (3, 3), (4, 2)] {
        let formula = count_nilpotent(n, q as u64).map_err(|e| e.to_string())?;
        let s = Semiring::chain(q).map_err(|e| e.to_string())?;
        let brute = count_nilpotent_bruteforce(&s, n, &budget).map_err(|e| e.to_string())?;
        ensure!(formula == brute, "(n,q)=({n},{q}): formula {formula}, oracle {brute}");
        report.push(format!("({n},{q})={formula}"));
    }
    ensure!(
        count_nilpotent(4, 2).unwrap() == big(543),
        "(4,2) is not 543"
    );
    Ok(report.join(" "))
}

fn recurrence_matches_explicit() -> Outcome {
    for n in 0..=10 {
        let r = acyclic_gf_recurrence(n);
        let e = acyclic_gf_explicit(n);
        ensure!(r == e, "n={n}: recurrence {r} vs explicit {e}");
    }
    Ok("coefficientwise for n in 0..=10".into())
}

fn non_entire_count() -> Outcome {
    let s = Semiring::Powerset(2);
    let brute = count_nilpotent_bruteforce(&s, 2, &EnumerationBudget::default())
        .map_err(|e| e.to_string())?;
    ensure!(brute == big(9), "powerset(2), n=2: got {brute}");
    let formula = count_nilpotent(2, 4).unwrap();
    ensure!(formula != brute, "entire formula at q=4 coincides with {brute}");
    Ok(format!("{brute} = 3^2, entire formula at q=4 gives {formula}"))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn gl_structure() -> Outcome {
    let budget = EnumerationBudget::default();
    let mut report = Vec::new();
    for (s, n, expected) in [
        (Semiring::Boolean, 2usize, 2usize),
        (Semiring::Boolean, 3, 6),
        (Semiring::Chain(3), 2, 2),
        (Semiring::Powerset(2), 2, 4),
    ] {
        let units = s.elements().unwrap().iter().filter(|v| s.is_unit(v)).count() as u64;
        let k = max_orthogonal_decomposition(&s).map_err(|e| e.to_string())?.len() as u32;
        let order = units.pow(n as u32) * factorial(n).pow(k);
        ensure!(order == expected as u64, "{s} n={n}: |U|^n (n!)^k = {order}");
        let gl = enumerate_gl(&s, n, &budget).map_err(|e| e.to_string())?;
        ensure!(gl.len() == expected, "{s} n={n}: enumerated {}", gl.len());
        let id = Matrix::identity(&s, n).unwrap();
        for a in &gl {
            let f = factorize_invertible(a).map_err(|e| format!("{s}: {e}"))?;
            ensure!(f.reconstruct().unwrap() == *a, "{s}: factorization of\n{a}does not rebuild");
            let b = invert(a).map_err(|e| format!("{s}: {e}"))?;
            ensure!(
                a.mul(&b).unwrap() == id && b.mul(a).unwrap() == id,
                "{s}: inverse check failed for\n{a}"
            );
        }
        report.push(format!("{s} n={n}: {}", gl.len()));
    }
    Ok(report.join(", "))
}

fn check_decomposition(a: &Matrix, d: &SquareZeroDecomposition, bound: usize) -> Result<(), String> {
    ensure!(d.len() <= bound, "{} summands exceed {bound} for\n{a}", d.len());
    let mut total = Matrix::zeros(a.semiring(), a.n()).unwrap();
    for b in d.summands() {
        ensure!(b.mul(b).unwrap().is_zero(), "summand does not square to zero:\n{b}");
        total = total.add(b).unwrap();
    }
    ensure!(total == *a, "summands do not add up to\n{a}");
    Ok(())
}

fn squarezero_nilpotent() -> Outcome {
    let all = antiring::oracle::nilpotent_matrices(&Semiring::Boolean, 4, &EnumerationBudget::default())
        .map_err(|e| e.to_string())?;
    ensure!(all.len() == 543, "found {} boolean nilpotents", all.len());
    for a in &all {
        let d = decompose_nilpotent(a).map_err(|e| e.to_string())?;
        check_decomposition(a, &d, 2)?;
    }
    let mut rng = common::rng(6);
    let mut worst = 0;
    for t in 0..100 {
        let s = if t % 2 == 0 { Semiring::Chain(3) } else { Semiring::Tropical };
        let a = common::random_nilpotent(&s, 32, 0.6, &mut rng);
        let d = decompose_nilpotent(&a).map_err(|e| e.to_string())?;
        check_decomposition(&a, &d, 5)?;
        worst = worst.max(d.len());
    }
    Ok(format!("543 boolean 4x4, 100 random n=32 (max {worst} summands)"))
}

fn support(m: &Matrix) -> BTreeSet<(usize, usize)> {
    let n = m.n();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| m.is_nonzero_at(i, j))
        .collect()
}

fn squarezero_trace_zero() -> Outcome {
    let s = Semiring::Naturals;
    let v = |k: u32| Value::Nat(BigUint::from(k));
    let generic = Matrix::from_rows(
        &s,
        vec![
            vec![v(0), v(1), v(2)],
            vec![v(3), v(0), v(4)],
            vec![v(5), v(6), v(0)],
        ],
    )
    .unwrap();
    let d = decompose_trace_zero(&generic).map_err(|e| e.to_string())?;
    check_decomposition(&generic, &d, 3)?;
    let classes: BTreeSet<_> = d.summands().iter().map(support).collect();
    let displayed: BTreeSet<BTreeSet<(usize, usize)>> = [
        [(0, 1), (2, 1)],
        [(0, 2), (1, 2)],
        [(1, 0), (2, 0)],
    ]
    .into_iter()
    .map(|c| c.into_iter().collect())
    .collect();
    ensure!(classes == displayed, "generic 3x3 classes {classes:?}");

    let mut rng = common::rng(7);
    let mut cases = 0;
    for s in [Semiring::Boolean, Semiring::Powerset(2)] {
        for n in 1..=8 {
            for _ in 0..25 {
                let a = common::random_trace_zero(&s, n, &mut rng);
                let d = decompose_trace_zero(&a).map_err(|e| e.to_string())?;
                check_decomposition(&a, &d, capacity(n))?;
                cases += 1;
            }
        }
    }
    Ok(format!("generic 3x3 matches, {cases} random inputs within N(n)"))
}

fn sharpness() -> Outcome {
    let t5 = Digraph::transitive_tournament(5);
    ensure!(
        min_coloring_search(&t5, 2).map_err(|e| e.to_string())?.is_none(),
        "transitive tournament n=5 has a 2-coloring"
    );
    ensure!(min_coloring_search(&t5, 3).unwrap().is_some(), "no 3-coloring of tournament n=5");
    let k4 = Digraph::complete(4);
    ensure!(
        min_coloring_search(&k4, 3).map_err(|e| e.to_string())?.is_none(),
        "complete digraph n=4 has a 3-coloring"
    );
    ensure!(min_coloring_search(&k4, 4).unwrap().is_some(), "no 4-coloring of complete n=4");
    ensure!(ceil_log2(5) == 3 && capacity(4) == 4, "bounds disagree with search");
    Ok("chi(T5)=3, chi(K4)=4=N(4)".into())
}

fn index_lemma() -> Outcome {
    let mut nilpotents = 0;
    let mut failure = None;
    for n in 1..=4 {
        let total = 1u64 << (n * n);
        for_each_matrix(&Semiring::Boolean, n, 0..total, |a| {
            if failure.is_some() || !a.pow(n as u64).is_zero() {
                return;
            }
            nilpotents += 1;
            let h = nilpotency_index(a).unwrap();
            let l = longest_path(&digraph_of(a)).unwrap();
            if h != l + 1 {
                failure = Some(format!("index {h}, longest path {l} for\n{a}"));
            }
        })
        .map_err(|e| e.to_string())?;
    }
    if let Some(f) = failure {
        return Err(f);
    }
    let mut rng = common::rng(9);
    let semirings = common::entire_builtins();
    for _ in 0..1000 {
        let s = &semirings[rng.gen_range(0..semirings.len())];
        let n = rng.gen_range(1..=6);
        let density = rng.gen_range(0.1..0.9);
        let a = common::random_nilpotent(s, n, density, &mut rng);
        let h = nilpotency_index(&a).map_err(|e| e.to_string())?;
        let l = longest_path(&digraph_of(&a)).unwrap();
        ensure!(h == l + 1, "{s}: index {h}, longest path {l} for\n{a}");
    }
    Ok(format!("{nilpotents} boolean nilpotents n<=4, 1000 random"))
}

fn union_lemma() -> Outcome {
    let mut rng = common::rng(10);
    let semirings = common::builtins();
    for _ in 0..10_000 {
        let s = &semirings[rng.gen_range(0..semirings.len())];
        let n = rng.gen_range(1..=6);
        let a = common::random_matrix(s, n, &mut rng);
        let b = common::random_matrix(s, n, &mut rng);
        let lhs = digraph_of(&a.add(&b).unwrap());
        let rhs = digraph_of(&a).union(&digraph_of(&b));
        ensure!(lhs == rhs, "{s}: D(A+B) differs for\n{a}and\n{b}");
    }
    Ok(format!("10000 random pairs over {} built-ins", semirings.len()))
}

fn axiom_validator() -> Outcome {
    for s in [
        Semiring::Boolean,
        Semiring::Chain(3),
        Semiring::Chain(6),
        Semiring::Powerset(1),
        Semiring::Powerset(2),
        Semiring::Powerset(3),
    ] {
        let report = validate_axioms(&s.to_tables().unwrap());
        ensure!(report.is_semiring() && report.is_commutative(), "{s} fails the semiring laws");
        ensure!(report.is_zerosumfree(), "{s} reported as not zerosumfree");
        let entire = !matches!(s, Semiring::Powerset(m) if m >= 2);
        ensure!(report.is_entire() == entire, "{s}: entire = {}", report.is_entire());
    }
    let z2 = validate_axioms(&integers_mod(2).unwrap());
    ensure!(z2.is_semiring(), "integers mod 2 rejected as a semiring");
    let witness = z2.zerosumfree.as_ref().map(|v| v.witness.clone());
    ensure!(witness == Some(vec![1, 1]), "integers mod 2 witness {witness:?}");
    Ok("lattices classified, integers mod 2 rejected at (1,1)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("nilpotent counts match closed forms", nilpotent_closed_forms, Some(1)),
        ("formula equals brute-force oracle", formula_matches_oracle, Some(10)),
        ("recurrence equals explicit formula", recurrence_matches_explicit, Some(1)),
        ("non-entire count powerset(2)", non_entire_count, None),
        ("GL structure", gl_structure, Some(30)),
        ("square-zero decomposition of nilpotents", squarezero_nilpotent, Some(30)),
        ("trace-zero decomposition", squarezero_trace_zero, Some(5)),
        ("sharpness oracles", sharpness, Some(60)),
        ("nilpotency index equals longest path + 1", index_lemma, None),
        ("union lemma", union_lemma, None),
        ("axiom validator", axiom_validator, None),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(secs)) if elapsed > Duration::from_secs(*secs) => {
                Err(format!("exceeded {secs}s limit"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS {name} [{:.2}s]: {detail}",
                k + 1,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL {name} [{:.2}s]: {why}",
                    k + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! The acceptance suite. Each criterion prints one `PASS`/`FAIL` line with its
//! wall time; run with `--nocapture` to see them.

use std::process::Command;
use std::time::{Duration, Instant};

use schubert_core::coxgen::{scan_bigrassmannian_property, CoxeterGroup, CoxeterType};
use schubert_core::poly::{rat, verify_sparsity, CoinvariantAlgebra};
use schubert_core::presentation::{
    gen_set, lower_bound_family, schubert_ideal_minimal_generators, verify_ideal_equality,
    verify_inclusion_case, verify_minimality_conjecture, verify_schubert_ideals_a,
    verify_schubert_ideals_coxeter, Variant, DEFAULT_DEGREE_BUDGET,
};
use schubert_core::symfunc::{column_sweep, hook_sweep, jacobi_trudi_sweep, pieri_sweep};
use schubert_core::symgroup::{self, bruhat_leq, Permutation};

fn criterion(number: u32, name: &str, limit: Duration, check: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let ok = outcome.is_ok() && elapsed <= limit;
    println!(
        "criterion {number:>2} {}  {name}  ({:.2}s, limit {}s){}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs(),
        match &outcome {
            Err(e) => format!(": {e}"),
            Ok(()) if !ok => ": over time".to_string(),
            Ok(()) => String::new(),
        }
    );
    assert!(ok, "criterion {number} failed");
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn c01_essential_set_golden() {
    criterion(1, "essential set of 425163", Duration::from_secs(1), || {
        let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
            .args(["essential-set", "425163"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("exit {:?}", out.status))?;
        let text = String::from_utf8(out.stdout).unwrap();
        let expected = "\
w = 425163
E(w) = {341256, 152346, 134526, 123645}

cell   condition  meaning             bigrassmannian
(2,3)  C(2,2,1)   dim V_2 ∩ C^2 >= 1  341256
(2,5)  C(2,4,2)   dim V_2 ∩ C^4 >= 2  152346
(4,3)  C(4,2,2)   dim V_4 ∩ C^2 >= 2  134526
(4,6)  C(4,5,4)   dim V_4 ∩ C^5 >= 4  123645
";
        ensure(text == expected, || format!("got\n{text}"))
    });
}

#[test]
fn c02_non_minimal_concatenations() {
    criterion(2, "1243 and 23541 need 2 generators, not 3", Duration::from_secs(5), || {
        for (w, degrees) in [("1243", vec![1, 1]), ("23541", vec![2, 2])] {
            let rep = schubert_ideal_minimal_generators(&p(w));
            ensure(rep.generates, || format!("{w}: concatenation does not generate I_w"))?;
            ensure(rep.concatenated == 3, || format!("{w}: concatenated {}", rep.concatenated))?;
            ensure(rep.report.total == 2, || format!("{w}: minimal {}", rep.report.total))?;
            ensure(rep.report.degrees == degrees, || format!("{w}: degrees {:?}", rep.report.degrees))?;
        }
        let e: Vec<String> = symgroup::essential_set(&p("23541")).iter().map(ToString::to_string).collect();
        ensure(e == ["31245", "14235"], || format!("E(23541) = {e:?}"))
    });
}

#[test]
fn c03_conjecture_sweep() {
    criterion(3, "minimality for r <= 4, n - r <= 5", Duration::from_secs(600), || {
        let rep = verify_minimality_conjecture(4, 5, DEFAULT_DEGREE_BUDGET).map_err(|e| e.to_string())?;
        ensure(rep.pass, || format!("{} of {} cases fail", rep.failures, rep.cases.len()))
    });
}

#[test]
fn c04_ideal_equality() {
    criterion(4, "gen sets span J_v over Z, n <= 7", Duration::from_secs(300), || {
        let mut checked = 0;
        for n in 2..=7 {
            for (_, v) in symgroup::bigrassmannians(n) {
                for variant in [Variant::Full, Variant::One, Variant::Two] {
                    let ok = verify_ideal_equality(&v, variant).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("{v} {variant}"))?;
                    checked += 1;
                }
            }
        }
        ensure(checked > 0, || "nothing checked".into())
    });
}

#[test]
fn c05_schubert_ideals() {
    criterion(5, "I_w generated by grassmannians: S_2..S_5, B2, B3", Duration::from_secs(900), || {
        for n in 2..=5 {
            let rep = verify_schubert_ideals_a(n);
            ensure(rep.pass, || format!("S_{n}: {:?}", rep.failures))?;
        }
        for rank in [2, 3] {
            let rep = verify_schubert_ideals_coxeter(CoxeterType::B, rank).map_err(|e| e.to_string())?;
            ensure(rep.pass, || format!("B{rank}: {:?}", rep.failures))?;
        }
        Ok(())
    });
}

#[test]
fn c06_essential_elements_bigrassmannian() {
    criterion(6, "essential sets are bigrassmannian: A1..A5, B2, B3, D4", Duration::from_secs(120), || {
        let groups = (1..=5)
            .map(|r| (CoxeterType::A, r))
            .chain([(CoxeterType::B, 2), (CoxeterType::B, 3), (CoxeterType::D, 4)]);
        for (kind, rank) in groups {
            let g = CoxeterGroup::build(kind, rank).map_err(|e| e.to_string())?;
            let rep = scan_bigrassmannian_property(&g);
            ensure(rep.pass, || format!("{}: {} violations", rep.group, rep.violations.len()))?;
        }
        Ok(())
    });
}

#[test]
fn c07_sparsity_duality_support() {
    criterion(7, "sparsity, duality and support in S_4", Duration::from_secs(120), || {
        let alg = CoinvariantAlgebra::type_a(4);
        let perms: Vec<Permutation> = (0..alg.size()).map(|w| p(&alg.label(w))).collect();
        let mut triples = 0;
        for mask in 0u32..8 {
            let j: Vec<usize> = (1..=3).filter(|k| mask & (1 << (k - 1)) != 0).collect();
            let parabolic: Vec<&Permutation> =
                perms.iter().filter(|x| x.reduced_word().iter().all(|i| j.contains(i))).collect();
            for u in perms.iter().filter(|u| u.descents().iter().all(|d| !j.contains(d))) {
                for x in &parabolic {
                    for x2 in parabolic.iter().filter(|x2| x2.length() == x.length()) {
                        let ok = verify_sparsity(&alg, u, x, x2, &j).map_err(|e| e.to_string())?;
                        ensure(ok, || format!("u={u} x={x} x'={x2} J={j:?}"))?;
                        triples += 1;
                    }
                }
            }
        }
        ensure(triples > 0, || "no triples".into())?;
        for w in 0..alg.size() {
            for w2 in alg.elements_of_length(alg.length(w)) {
                let c = alg.divided_difference_by(alg.schubert(w), w2).constant_term();
                let expected = if w == w2 { rat(1) } else { rat(0) };
                ensure(c == expected, || format!("duality fails at {}, {}", perms[w], perms[w2]))?;
            }
        }
        for u in 0..alg.size() {
            for v in 0..alg.size() {
                for w in alg.elements_of_length(alg.length(u) + alg.length(v)) {
                    let c = alg.structure_constant(u, v, w);
                    let above = bruhat_leq(&perms[u], &perms[w]).unwrap() && bruhat_leq(&perms[v], &perms[w]).unwrap();
                    ensure(above || c == rat(0), || format!("support fails at {}, {}, {}", perms[u], perms[v], perms[w]))?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn c08_identity_suite() {
    criterion(8, "hook, column, Jacobi-Trudi and Pieri identities", Duration::from_secs(120), || {
        for rep in [hook_sweep(8, 5), column_sweep(10), jacobi_trudi_sweep(8), pieri_sweep(8, 6)] {
            ensure(rep.pass && rep.cases > 0, || format!("{}: {:?}", rep.identity, rep.failures))?;
        }
        Ok(())
    });
}

#[test]
fn c09_inclusion_case() {
    criterion(9, "t = s gives elementary symmetric generators, n <= 8", Duration::from_secs(60), || {
        let mut checked = 0;
        for n in 2..=8 {
            for (rt, v) in symgroup::bigrassmannians(n) {
                if rt.t != rt.s {
                    continue;
                }
                ensure(verify_inclusion_case(&v).map_err(|e| e.to_string())?, || format!("{v}"))?;
                checked += 1;
            }
        }
        ensure(checked > 0, || "no cases".into())?;
        let two: Vec<String> = gen_set(&p("1324"), Variant::Two).unwrap().iter().map(ToString::to_string).collect();
        ensure(two == ["[1]", "[1,1]"], || format!("1324: {two:?}"))
    });
}

#[test]
fn c10_lower_bound_family() {
    criterion(10, "central bigrassmannians need 2 and 6 generators", Duration::from_secs(600), || {
        for (m, expected) in [(1, 2), (2, 6)] {
            let (v, rep) = lower_bound_family(m, DEFAULT_DEGREE_BUDGET).map_err(|e| e.to_string())?;
            ensure(rep.total == expected, || format!("m={m}, v={v}: {} generators", rep.total))?;
        }
        Ok(())
    });
}

use proptest::prelude::*;
use schubert_core::coxgen::{scan_bigrassmannian_property, CoxeterGroup, CoxeterType};
use schubert_core::poly::schubert_polynomial;
use schubert_core::presentation::{
    bigrassmannian_data, gen_set_data, minimal_generators, shapes_to_vectors,
    verify_ideal_equality, verify_schubert_ideals_a, verify_schubert_ideals_coxeter, Variant,
};
use schubert_core::symfunc::{schur_in_variables, SchurVector};
use schubert_core::symgroup::{self, grassmannian_to_partition, Permutation};

#[test]
fn grassmannian_schubert_polynomials_are_schur_polynomials() {
    for n in 2..=6 {
        for w in Permutation::all(n) {
            let des = w.descents();
            if des.len() != 1 {
                continue;
            }
            let r = des[0];
            let lambda = grassmannian_to_partition(&w, r).unwrap();
            let mut schur = schubert_core::poly::Polynomial::zero(n);
            for (m, c) in schur_in_variables(&lambda, r).terms() {
                let mut m = m.clone();
                m.resize(n, 0);
                schur.add_term(m, c.clone());
            }
            assert_eq!(schubert_polynomial(&w), schur, "{w}");
        }
    }
}

#[test]
fn every_generating_set_generates_j_v_up_to_s7() {
    for n in 2..=7 {
        for (_, v) in symgroup::bigrassmannians(n) {
            for variant in [Variant::Full, Variant::One, Variant::Two] {
                assert!(verify_ideal_equality(&v, variant).unwrap(), "{v} {variant}");
            }
        }
    }
}

#[test]
fn schubert_ideals_are_generated_by_grassmannians() {
    for n in 2..=5 {
        let rep = verify_schubert_ideals_a(n);
        assert!(rep.pass, "S_{n}: {:?}", rep.failures);
    }
    for rank in [2, 3] {
        let rep = verify_schubert_ideals_coxeter(CoxeterType::B, rank).unwrap();
        assert!(rep.pass, "B{rank}: {:?}", rep.failures);
    }
}

#[test]
fn essential_sets_are_bigrassmannian_in_small_weyl_groups() {
    let groups = (1..=5)
        .map(|r| (CoxeterType::A, r))
        .chain([(CoxeterType::B, 2), (CoxeterType::B, 3), (CoxeterType::D, 4)]);
    for (kind, rank) in groups {
        let report = scan_bigrassmannian_property(&CoxeterGroup::build(kind, rank).unwrap());
        assert!(report.pass, "{}: {:?}", report.group, report.violations);
    }
}

fn any_bigrassmannian() -> impl Strategy<Value = Permutation> {
    let all: Vec<Permutation> = (3..=6)
        .flat_map(symgroup::bigrassmannians)
        .map(|(_, v)| v)
        .collect();
    proptest::sample::select(all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Throwing in extra elements of `J_v` never changes the minimal counts.
    #[test]
    fn redundant_generators_leave_counts_alone(
        v in any_bigrassmannian(),
        picks in proptest::collection::vec((any::<proptest::sample::Index>(), -2i64..=2), 1..4),
    ) {
        let d = bigrassmannian_data(&v).unwrap();
        let one = shapes_to_vectors(&gen_set_data(&d, Variant::One));
        let full = gen_set_data(&d, Variant::Full);
        let base = minimal_generators(&one, d.r, d.n, 64).unwrap();
        let mut extended = one.clone();
        for (idx, c) in picks {
            let shape = full[idx.index(full.len())].clone();
            extended.push(SchurVector::schur(shape).scale(c));
        }
        let more = minimal_generators(&extended, d.r, d.n, 64).unwrap();
        prop_assert_eq!(base.counts_per_degree, more.counts_per_degree);
        prop_assert!(more.torsion.is_empty());
    }
}

//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with --nocapture) and failing loudly when any
//! sub-check breaks. Every expected value is checked by exact equality.

mod common;

use std::time::{Duration, Instant};

use common::oracle::{oracle_hom_flat, oracle_series, oracle_squares, rref, small_corpus, subspace_rows};
use common::{
    chain_holds, combine, corpus, e_powers_stay_in_hom, hom_combination, ideals_invariant_under,
    inner_automorphism, inner_image_of_twist_is_levi, random_hemisemidirect,
    twisted_bracket_identity,
};
use leibnizalg::conjugacy::{classify, criterion, find_inner_conjugator, s_theta, Obstruction, Verdict, Witness};
use leibnizalg::fixtures;
use leibnizalg::levi::{levi_subalgebra, verify_levi};
use leibnizalg::linmap::LinearMap;
use leibnizalg::matrix::{Matrix, Vector};
use leibnizalg::radicals::{nilradical, series, solvable_radical, squares_ideal, SeriesKind};
use leibnizalg::scalar::{frac, Scalar};
use leibnizalg::smodules::hom_space;
use leibnizalg::subspace::coordinate_subspace;

fn report(label: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("acceptance {label}: PASS"),
        Err(msg) => println!("acceptance {label}: FAIL ({msg})"),
    }
    if let Err(msg) = result {
        panic!("acceptance {label} failed: {msg}");
    }
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn within(budget: Duration, start: Instant, label: &str) -> Result<(), String> {
    let elapsed = start.elapsed();
    ensure(
        elapsed <= budget,
        &format!("{label} took {elapsed:?}, over the {budget:?} budget"),
    )
}

fn nine_dim_checks() -> Result<(), String> {
    let start = Instant::now();
    let table = fixtures::nine_dim_nonconjugate();
    ensure(table.satisfies_identity(), "identity fails")?;

    let i = squares_ideal(&table).map_err(|e| e.to_string())?;
    ensure(i == coordinate_subspace(9, &[6, 7, 8]), "I is not <x7,x8,x9>")?;
    let n = nilradical(&table).map_err(|e| e.to_string())?;
    ensure(n == coordinate_subspace(9, &[3, 4, 6, 7, 8]), "N is not <y4,y5,x7,x8,x9>")?;
    let r = solvable_radical(&table).map_err(|e| e.to_string())?;
    ensure(r.dim() == 6, "R does not have dimension 6")?;

    let s = coordinate_subspace(9, &[0, 1, 2]);
    let check = verify_levi(&table, &s).map_err(|e| e.to_string())?;
    ensure(check.passed(), "<e1,e2,e3> fails Levi verification")?;

    let homs = hom_space(&table, &s, &i).map_err(|e| e.to_string())?;
    ensure(homs.dim() == 1, "Hom space is not one-dimensional")?;

    let crit = criterion(&table, &s).map_err(|e| e.to_string())?;
    ensure(!crit.holds && crit.se != crit.j, "[S,E] = J unexpectedly holds")?;

    let c = classify(&table).map_err(|e| e.to_string())?;
    ensure(c.verdict == Verdict::ExistsNonConjugatePair, "verdict is not EXISTS_NON_CONJUGATE_PAIR")?;
    ensure(c.certified, "classification is not certified")?;
    let Some(Witness::NonConjugateTwist { theta_index, s_twisted, obstruction }) = &c.witness
    else {
        return Err("witness is not a non-conjugate twist".into());
    };
    let theta = homs.map(*theta_index);
    let expected_twist = s_theta(&table, &s, theta).map_err(|e| e.to_string())?;
    ensure(*s_twisted == expected_twist, "witness twist differs from s_theta")?;

    // Replay the obstruction's block constraints independently: p = y6
    // centralizes S, right multiplication by p is injective on the twist
    // image, I annihilates N from the left, and [S,N] misses I.
    let Obstruction::RigidCentralizer { p } = obstruction else {
        return Err("obstruction is not the rigid-centralizer form".into());
    };
    ensure(*p == Vector::basis(9, 5), "distinguished direction is not y6")?;
    ensure(r.contains(p) && !n.contains(p), "p is not in R minus N")?;
    for x in s.basis_rows() {
        let product = table.bracket(&x, p).map_err(|e| e.to_string())?;
        ensure(product.is_zero(), "[S, p] is nonzero")?;
    }
    let image = homs.image_ambient(*theta_index);
    let mult = table.right_mult(p);
    let moved: Vec<Vector> = image.basis_rows().iter().map(|v| mult.apply(v)).collect();
    let rank = Matrix::from_rows(moved).rank();
    ensure(rank == image.dim(), "right multiplication by p is singular on the twist image")?;
    ensure(table.subspace_product(&i, &n).is_zero(), "[I, N] is nonzero")?;
    ensure(
        table.subspace_product(&s, &n).intersect(&i).is_zero(),
        "[S, N] meets I",
    )?;

    within(Duration::from_secs(1), start, "9-dim reproduction")
}

fn l201_checks() -> Result<(), String> {
    let start = Instant::now();
    let table = fixtures::l201();
    ensure(table.satisfies_identity(), "identity fails")?;

    let i = squares_ideal(&table).map_err(|e| e.to_string())?;
    ensure(i == coordinate_subspace(8, &[3, 4, 5]), "I is not <x0,x1,x2>")?;

    let rep = levi_subalgebra(&table).map_err(|e| e.to_string())?;
    let crit = criterion(&table, &rep.s).map_err(|e| e.to_string())?;
    ensure(crit.e == coordinate_subspace(8, &[3, 4, 5, 6]), "E is not <x0,x1,x2,y1>")?;
    ensure(crit.se == i && crit.holds, "[S,E] does not equal I")?;

    let c = classify(&table).map_err(|e| e.to_string())?;
    ensure(c.verdict == Verdict::InnerConjugate, "verdict is not INNER_CONJUGATE")?;

    // tau = restriction of right multiplication by y1 to S.
    let y1 = Vector::basis(8, 6);
    let rows: Result<Vec<Vector>, String> = rep
        .s
        .basis_rows()
        .iter()
        .map(|x| {
            let image = table.bracket(x, &y1).map_err(|e| e.to_string())?;
            rep.i.coordinates(&image).ok_or_else(|| "R_{y1} leaves I".to_string())
        })
        .collect();
    let tau = LinearMap::new(rep.s.dim(), rep.i.dim(), Matrix::from_rows(rows?));

    let b = find_inner_conjugator(&table, &rep.s, &tau).map_err(|e| e.to_string())?;
    let exp = table.right_mult(&b).exp_nilpotent().map_err(|e| e.to_string())?;
    let square = table.right_mult(&b).matrix().pow(2);
    for (p, x) in rep.s.basis_rows().iter().enumerate() {
        let mut expected = x.clone();
        expected.add_assign_scaled(&rep.i.embed(&tau.matrix().row(p)), &frac(1, 1));
        ensure(exp.apply(x) == expected, "exp(R_b) is not id + tau on S")?;
        ensure(x.mul_matrix(&square).is_zero(), "R_b^2 is nonzero on S")?;
    }

    let twisted = s_theta(&table, &rep.s, &tau).map_err(|e| e.to_string())?;
    let image_rows = rep.s.basis_rows().iter().map(|x| exp.apply(x)).collect();
    let image = leibnizalg::Subspace::from_rows(8, image_rows);
    ensure(image == twisted, "exp(R_b)(S) is not the twisted complement")?;

    within(Duration::from_secs(1), start, "L201 reproduction")
}

fn hemisemidirect_checks() -> Result<(), String> {
    let table = fixtures::hemi_sl2_adjoint();
    let rep = levi_subalgebra(&table).map_err(|e| e.to_string())?;
    let r = solvable_radical(&table).map_err(|e| e.to_string())?;
    let crit = criterion(&table, &rep.s).map_err(|e| e.to_string())?;

    ensure(crit.j == rep.i && !crit.j.is_zero(), "J does not equal the nonzero I")?;
    ensure(table.subspace_product(&crit.j, &r).is_zero(), "[J, R] is nonzero")?;
    ensure(crit.se.is_zero() && crit.se != crit.j, "[S,E] is not zero away from J")?;

    let c = classify(&table).map_err(|e| e.to_string())?;
    ensure(c.verdict == Verdict::ConjugateNonInner, "verdict is not CONJUGATE_NON_INNER")?;
    let Some(Witness::TwistAutomorphism { theta_index, s_twisted, auto }) = &c.witness else {
        return Err("witness is not a twist automorphism".into());
    };
    ensure(table.is_automorphism(auto.map()), "witness map is not an automorphism")?;
    ensure(auto.apply_subspace(&rep.s) == *s_twisted, "automorphism misses the twisted complement")?;
    let homs = hom_space(&table, &rep.s, &rep.i).map_err(|e| e.to_string())?;
    let expected = s_theta(&table, &rep.s, homs.map(*theta_index)).map_err(|e| e.to_string())?;
    ensure(*s_twisted == expected, "witness twist differs from s_theta")?;

    // Same regime on the two-component module fixture.
    let double = fixtures::hemi_sl2_double();
    let c2 = classify(&double).map_err(|e| e.to_string())?;
    ensure(
        c2.verdict == Verdict::ConjugateNonInner,
        "two-component fixture is not CONJUGATE_NON_INNER",
    )
}

/// Deterministic generator of small rationals for the sweep.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        // xorshift*; fixed seed keeps the sweep reproducible.
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }

    fn scalar(&mut self) -> Scalar {
        let p = self.below(7) as i64 - 3;
        let q = self.below(3) as i64 + 1;
        frac(p, q)
    }

    fn coeffs(&mut self, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.scalar()).collect()
    }
}

fn invariant_sweep_checks() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = Rng(0x9E3779B97F4A7C15);
    let cases_per_fixture = 112;
    for case in corpus() {
        for _ in 0..cases_per_fixture {
            let blocks: Vec<Vec<Scalar>> = (0..1 + rng.below(2))
                .map(|_| rng.coeffs(case.rep.n.dim()))
                .collect();
            let auto = inner_automorphism(case, &blocks);
            ideals_invariant_under(case, &auto)?;

            let b = combine(&case.e, &rng.coeffs(case.e.dim()));
            e_powers_stay_in_hom(case, &b)?;

            let theta = hom_combination(case, &rng.coeffs(case.homs.dim()));
            twisted_bracket_identity(case, &theta)?;

            let tau = hom_combination(case, &rng.coeffs(case.homs.dim()));
            inner_image_of_twist_is_levi(case, &tau, &auto)?;
        }
    }

    for table in fixtures::test_corpus() {
        chain_holds(&table)?;
    }
    for _ in 0..50 {
        let irreps: Vec<usize> = (0..1 + rng.below(2)).map(|_| rng.below(4)).collect();
        let ops: Vec<(usize, usize, i64)> = (0..rng.below(6))
            .map(|_| (rng.below(12), rng.below(12), rng.below(5) as i64 - 2))
            .collect();
        let table = random_hemisemidirect(&irreps, &ops);
        ensure(table.satisfies_identity(), "generated table fails the identity")?;
        chain_holds(&table)?;
    }

    within(Duration::from_secs(30), start, "invariant sweep")
}

fn oracle_checks() -> Result<(), String> {
    for table in small_corpus() {
        let main_squares = rref(subspace_rows(&squares_ideal(&table).map_err(|e| e.to_string())?));
        ensure(
            main_squares == oracle_squares(&table),
            &format!("squares ideal differs on '{}'", table.name()),
        )?;

        for kind in [SeriesKind::Derived, SeriesKind::LowerCentral] {
            let main = series(&table, &table.full_space(), kind).map_err(|e| e.to_string())?;
            let oracle = oracle_series(&table, kind);
            ensure(
                main.terms.len() == oracle.len()
                    && main
                        .terms
                        .iter()
                        .zip(&oracle)
                        .all(|(term, expected)| &rref(subspace_rows(term)) == expected),
                &format!("{kind:?} series differs on '{}'", table.name()),
            )?;
        }

        let rep = levi_subalgebra(&table).map_err(|e| e.to_string())?;
        let homs = hom_space(&table, &rep.s, &rep.i).map_err(|e| e.to_string())?;
        let main_flat: Vec<Vec<Scalar>> = homs
            .maps()
            .iter()
            .map(|m| m.flatten().coords().to_vec())
            .collect();
        ensure(
            rref(main_flat) == oracle_hom_flat(&table, &rep.s, &rep.i),
            &format!("hom space differs on '{}'", table.name()),
        )?;
    }
    Ok(())
}

#[test]
fn nine_dimensional_example_is_reproduced_exactly() {
    report("1/5 nine-dimensional two-class fixture", nine_dim_checks());
}

#[test]
fn eight_dimensional_example_solves_inner_conjugacy() {
    report("2/5 L201 inner conjugacy", l201_checks());
}

#[test]
fn hemisemidirect_fixture_conjugates_non_inner() {
    report("3/5 hemisemidirect outer conjugacy", hemisemidirect_checks());
}

#[test]
fn randomized_invariant_suites_hold_within_budget() {
    report("4/5 randomized invariant suites", invariant_sweep_checks());
}

#[test]
fn brute_force_oracles_agree_at_small_scale() {
    report("5/5 brute-force oracle agreement", oracle_checks());
}

//! Acceptance suite: one line per criterion, run with `cargo test --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repdesc::brauer::{brauer_decompose, clifford_trichotomy, devissage, verify_certificate, Trichotomy};
use repdesc::cyclo::{CycNum, CycPoly, GaloisAut, SubfieldSpec};
use repdesc::descent::{
    descend_prop7, find_multiplicity_one, hilbert90_solve, hom_dim_base_change_check, intertwiner_cocycle,
    noether_deuring, simple_root_scan, DescentError, MultOneWitness,
};
use repdesc::grp::{named, normal_subgroups, Group, Subgroup};
use repdesc::harness::{run_harness, HarnessStatus};
use repdesc::linalg::Matrix;
use repdesc::rep::{char_table, isotypic_projector, realize_irreducible, Character, MatrixRep};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Debug) -> String {
    format!("{e:?}")
}

/// The groups named for the Brauer and dévissage criteria.
fn criterion_groups() -> Vec<(String, Group)> {
    common::corpus_groups().into_iter().filter(|(n, _)| n != "C2xC2xC2").collect()
}

fn std_s3() -> MatrixRep {
    let g = named::s3();
    let w = CycNum::zeta(3);
    let a = Matrix::from_rows(vec![vec![w.clone(), CycNum::zero()], vec![CycNum::zero(), w.conj()]]);
    let b = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
    MatrixRep::new(&g, vec![a, b]).unwrap()
}

/// Eigenvalue multiplicities of `ρ(x)` read off the character by the
/// power-map formula `(1/m) Σ_s χ(x^s) ζ_m^{-js}`.
fn multiplicities_from_character(chi: &Character, x: usize) -> Vec<CycNum> {
    let g = chi.group();
    let m = g.element_order(x) as i64;
    (0..m)
        .map(|j| {
            let sum: CycNum = (0..m)
                .map(|s| chi.at(g.pow(x, s)) * &CycNum::root_of_unity(m as u64, -j * s))
                .sum();
            &sum * &CycNum::from_ratio(1, m)
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = named::symmetric(6);
    let chi = char_table(&g)
        .into_iter()
        .find(|c| c.degree_usize() == Some(16))
        .ok_or("no degree-16 character")?;
    let rho = realize_irreducible(&chi).map_err(err)?;
    ensure(rho.character() == chi, || "realized character differs".into())?;
    let scan = simple_root_scan(&rho);
    ensure(scan.len() == 11, || format!("{} classes", scan.len()))?;
    for c in &scan {
        ensure(!c.has_simple_root, || format!("class of {} has a simple root", c.element))?;
        let f: CycPoly = rho.image(c.class_rep).charpoly();
        let d = f.derivative();
        ensure((&d * &d).rem(&f).map_err(err)?.is_zero(), || format!("charpoly at {} does not divide f'^2", c.element))?;
        let mults = multiplicities_from_character(&chi, c.class_rep);
        ensure(!mults.iter().any(CycNum::is_one), || format!("character gives a simple eigenvalue at {}", c.element))?;
    }
    let everywhere = SubfieldSpec::cyclotomic(g.exponent());
    ensure(find_multiplicity_one(&rho, &everywhere).is_none(), || "a witness was found".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("NotFound on all 11 classes of S6, degree 16, in {:.1}s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (name, g) in criterion_groups() {
        let mut normals = vec![Subgroup::trivial(&g)];
        normals.extend(common::proper_normal(&g));
        for n in &normals {
            for chi in char_table(&g) {
                let d = brauer_decompose(&chi, &g, n).map_err(|e| format!("{name}: {e}"))?;
                ensure(d.residual_is_zero().map_err(err)?, || format!("{name}: nonzero residual"))?;
                ensure(d.terms.iter().all(|t| n.is_subgroup_of(&t.h)), || format!("{name}: H does not contain N"))?;
                count += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{count} decompositions with zero residual in {:.1}s", elapsed.as_secs_f64()))
}

fn top_irrep(g: &Group) -> MatrixRep {
    realize_irreducible(char_table(g).last().unwrap()).unwrap()
}

fn criterion_3() -> Outcome {
    let d4 = named::dihedral(4);
    let c4 = Subgroup::generated(&d4, &[d4.generators()[0]]);
    match clifford_trichotomy(&top_irrep(&d4), &d4, &Subgroup::whole(&d4), &c4).map_err(err)? {
        Trichotomy::I { constituents } if constituents.len() == 2 => {}
        other => return Err(format!("D4/C4 gave {other:?}")),
    }
    let s3 = named::s3();
    let sign = MatrixRep::linear(&char_table(&s3)[1]).unwrap();
    let a3 = named::alternating_in(&s3);
    let case = clifford_trichotomy(&sign, &s3, &Subgroup::whole(&s3), &a3).map_err(err)?;
    ensure(case.case_tag() == "II", || format!("S3/A3/sign gave {case:?}"))?;
    let q8 = named::quaternion();
    let z = normal_subgroups(&q8).into_iter().find(|n| n.order() == 2).unwrap();
    match clifford_trichotomy(&top_irrep(&q8), &q8, &Subgroup::whole(&q8), &z).map_err(err)? {
        Trichotomy::III { e: 2, .. } => {}
        other => return Err(format!("Q8/Z gave {other:?}")),
    }

    let mut tally = [0usize; 3];
    for (name, g) in common::corpus_groups() {
        let normals = normal_subgroups(&g);
        for k in &normals {
            for l in normals.iter().filter(|l| l.is_subgroup_of(k) && *l != k) {
                for chi in char_table(&k.group()) {
                    let pi = realize_irreducible(&chi).map_err(err)?;
                    let Ok(case) = clifford_trichotomy(&pi, &g, k, l) else { continue };
                    let index = k.order() / l.order();
                    let l_in_k = l.within(k).map_err(err)?;
                    let res = chi.restrict(&l_in_k).map_err(err)?;
                    let ok = match &case {
                        Trichotomy::I { constituents } => {
                            tally[0] += 1;
                            constituents.len() == index
                                && constituents.iter().all(|s| res.inner(s).is_ok_and(|m| m.is_one()))
                        }
                        Trichotomy::II { constituent } => {
                            tally[1] += 1;
                            res == *constituent
                        }
                        Trichotomy::III { constituent, e } => {
                            tally[2] += 1;
                            e * e == index && res == constituent.scale(*e as i64)
                        }
                    };
                    ensure(ok, || format!("{name}: side condition fails for {case:?}"))?;
                }
            }
        }
    }
    Ok(format!(
        "worked instances I/II/III correct; corpus instances: {} case I, {} case II, {} case III",
        tally[0], tally[1], tally[2]
    ))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for (name, g) in criterion_groups() {
        let table = char_table(&g);
        let reps: Vec<MatrixRep> = table.iter().map(|c| realize_irreducible(c).unwrap()).collect();
        for n in normal_subgroups(&g) {
            for rho in &reps {
                let cert = devissage(rho, &g, &n).map_err(|e| format!("{name}: {e}"))?;
                let report = verify_certificate(&cert);
                ensure(report.ok(), || format!("{name}: {:?}", report.failures))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} certificates verified"))
}

fn criterion_5() -> Outcome {
    let rho = std_s3();
    let q = SubfieldSpec::rationals();
    ensure(rho.character().is_rational() && !rho.defined_over(&q), || "std(S3) should be over Q(ζ3) with rational traces".into())?;
    let g = rho.group().clone();
    let transposition = g.generators()[1];
    let w = MultOneWitness { class_rep: transposition, element: g.element(transposition).clone(), alpha: CycNum::one() };
    let c = intertwiner_cocycle(&rho, &q, &w).map_err(err)?;
    ensure(c.check(), || "cocycle identity fails".into())?;
    let b = hilbert90_solve(&c, 0).map_err(err)?;
    ensure(c.auts.iter().zip(&c.maps).all(|(s, a)| a * &b.galois(s) == b), || "Hilbert 90 identity fails".into())?;
    let d = descend_prop7(&rho, &q, &w, 0).map_err(err)?;
    ensure(d.descended.generator_images().iter().all(|m| m.entries().all(|x| q.contains(x))), || "entries outside Q".into())?;

    let pool = common::rational_pool();
    let (mut with_witness, mut descended) = (0, 0);
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho0 = &pool[rng.gen_range(0..pool.len())];
        let n = common::EXTENSION_CONDUCTORS[rng.gen_range(0..common::EXTENSION_CONDUCTORS.len())];
        let p = common::random_invertible(&mut rng, rho0.rank(), n);
        let rho = rho0.conjugate_by(&p).map_err(err)?;
        let Some(w) = find_multiplicity_one(&rho, &q) else { continue };
        with_witness += 1;
        let d = descend_prop7(&rho, &q, &w, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(d.descended.defined_over(&q) && d.descended.character() == rho.character(), || {
            format!("seed {seed}: descended form is wrong")
        })?;
        descended += 1;
    }
    Ok(format!(
        "std(S3) descends to Q; random conjugates: {descended}/{with_witness} with a rational witness descended ({} of 50 had none)",
        50 - with_witness
    ))
}

/// Forms of `g` whose entries lie in `k0`: the rational forms plus any
/// realized irreducible that happens to be written over `k0`.
fn forms_over(g: &Group, k0: &SubfieldSpec) -> Vec<MatrixRep> {
    let mut out = common::rational_irreducibles(g);
    for chi in char_table(g) {
        let rho = realize_irreducible(&chi).unwrap();
        if rho.defined_over(k0) {
            out.push(rho);
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let groups = common::small_groups();
    let settings: [(SubfieldSpec, &[u64]); 3] = [
        (SubfieldSpec::rationals(), &[3, 4, 5, 8, 12]),
        (SubfieldSpec::cyclotomic(3), &[12, 15, 9]),
        (SubfieldSpec::cyclotomic(4), &[8, 12, 20]),
    ];
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let (k0, exts) = &settings[(seed % 3) as usize];
        let g = &groups[rng.gen_range(0..groups.len())].1;
        let forms = forms_over(g, k0);
        let mut pick = || {
            let parts: Vec<MatrixRep> =
                (0..rng.gen_range(1..=2)).map(|_| forms[rng.gen_range(0..forms.len())].clone()).collect();
            common::direct_sum(g, &parts)
        };
        let (m, n) = (pick(), pick());
        let k = SubfieldSpec::cyclotomic(exts[(seed as usize / 3) % exts.len()]);
        let check = hom_dim_base_change_check(&m, &n, k0, &k).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(check.holds(), || format!("seed {seed}: {check:?}"))?;
    }
    Ok("100 random pairs: Hom dimensions agree over k0 and k".into())
}

fn criterion_7() -> Outcome {
    let q = SubfieldSpec::rationals();
    let g = named::s3();
    let rho = std_s3();
    let out = noether_deuring(&rho, &MatrixRep::trivial(&g), &MatrixRep::permutation(&g), &q).map_err(err)?;
    ensure(out.rank() == 2 && out.defined_over(&q) && out.character() == rho.character(), || "S3 peeling failed".into())?;

    let pool = common::rational_pool();
    for seed in 0..25u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + seed);
        let rho0 = &pool[rng.gen_range(0..pool.len())];
        let g = rho0.group().clone();
        let n = common::EXTENSION_CONDUCTORS[rng.gen_range(0..common::EXTENSION_CONDUCTORS.len())];
        let rho = rho0.conjugate_by(&common::random_invertible(&mut rng, rho0.rank(), n)).map_err(err)?;
        let forms = common::rational_irreducibles(&g);
        let parts: Vec<MatrixRep> = (0..rng.gen_range(1..=3)).map(|_| forms[rng.gen_range(0..forms.len())].clone()).collect();
        let tau0 = common::direct_sum(&g, &parts);
        let sum = rho0.direct_sum(&tau0).map_err(err)?;
        let pi0 = sum.conjugate_by(&common::random_invertible(&mut rng, sum.rank(), 1)).map_err(err)?;
        let out = noether_deuring(&rho, &tau0, &pi0, &q).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(out.defined_over(&q) && out.character() == rho.character(), || format!("seed {seed}: wrong output"))?;
    }

    let q8 = named::quaternion();
    let chi2 = char_table(&q8).pop().unwrap();
    let reg = MatrixRep::regular(&q8);
    let e = isotypic_projector(&reg, &Subgroup::whole(&q8), &chi2).map_err(err)?;
    let h = reg.subrepresentation(&e.column_basis()).map_err(err)?;
    let r2 = realize_irreducible(&chi2).map_err(err)?;
    let rho = r2.direct_sum(&r2).map_err(err)?;
    match noether_deuring(&rho, &h, &h.direct_sum(&h).map_err(err)?, &q) {
        Err(DescentError::ConstituentMissing(_)) => {}
        other => return Err(format!("Q8 obstruction gave {other:?}")),
    }
    Ok("S3 peeling, 25 random instances and the Q8 ConstituentMissing case behave as required".into())
}

fn criterion_8() -> Outcome {
    let g = named::s3();
    let rho = std_s3();
    let a3 = named::alternating_in(&g);
    let twist = GaloisAut::new(3, 2).map_err(err)?;
    let r = run_harness(&rho, &g, &a3, &twist, 0).map_err(err)?;
    ensure(r.passed(), || format!("S3 harness: {:?}", r.summary_lines()))?;
    let fin = r.final_rep.as_ref().ok_or("no final representation")?;
    ensure(fin.character() == rho.character().galois(&twist), || "final character differs".into())?;

    let s6 = named::symmetric(6);
    let chi = char_table(&s6).into_iter().find(|c| c.degree_usize() == Some(16)).ok_or("no degree 16")?;
    let rho16 = realize_irreducible(&chi).map_err(err)?;
    let a6 = named::alternating_in(&s6);
    let r6 = run_harness(&rho16, &s6, &a6, &GaloisAut::identity(1), 0).map_err(err)?;
    match &r6.status {
        HarnessStatus::WitnessUnavailable { pairs } if !pairs.is_empty() => {}
        other => return Err(format!("S6 harness status {other:?}")),
    }
    ensure(r6.identity_check, || "S6 trace identity fails".into())?;
    Ok(format!(
        "S3 twisted by ζ3 -> ζ3^2 passes over a field of degree {}; S6 degree 16 reports WitnessUnavailable",
        r.field.degree()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("S6 degree-16 has no multiplicity-one eigenvalue", criterion_1),
        ("Brauer decomposition relative to N", criterion_2),
        ("Clifford trichotomy", criterion_3),
        ("dévissage certificates verify", criterion_4),
        ("descent by an intertwiner cocycle", criterion_5),
        ("Hom dimensions under base change", criterion_6),
        ("Noether-Deuring recovery", criterion_7),
        ("end-to-end harness", criterion_8),
    ];
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let out = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
                    (out, start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), (outcome, time))) in criteria.iter().zip(&results).enumerate() {
        let secs = time.as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({secs:.1}s) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({secs:.1}s) {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance suite. One test per criterion; each prints a PASS line when
//! its checks (all exact integer/polynomial equalities) hold.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use macfill::charge::{
    charge, charge_standard, killpatrick_decompose, ls_decompose, ChargeMethod, Word,
};
use macfill::extremal::{
    build_inv_max, build_inv_zero, build_quinv_max, build_quinv_zero, phi, varphi, RowMultisets,
    RowSets,
};
use macfill::filling::Filling;
use macfill::macdonald::{
    conjecture_match, filling_count, macdonald_poly, modified_hall_littlewood, q_whittaker,
    stat_profile, HallLittlewoodRoute, Statistic, WhittakerRoute,
};
use macfill::reading::{charge_word, cocharge_word, CellOrder};
use macfill::shape::Partition;
use macfill::verify::{
    check_maj_identity, extremal_uniqueness_sweep, partition_content_words, run_suite, Suite,
    VerifyOptions,
};

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn filling(rows: &[&[u32]]) -> Filling {
    let s = shape(&rows.iter().map(|r| r.len()).collect::<Vec<_>>());
    Filling::new(s, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn digits(s: &str) -> Word {
    Word::new(s.bytes().map(|b| (b - b'0') as u32).collect::<Vec<_>>()).unwrap()
}

fn shapes_up_to(max_cells: usize) -> Vec<Partition> {
    (0..=max_cells).flat_map(Partition::all_of_size).collect()
}

#[test]
fn criterion_1_worked_example_fidelity() {
    // statistics of the two displayed 3-row fillings
    let maj_display = filling(&[&[1, 3, 5, 5, 6, 8], &[2, 4, 2, 7], &[3, 1]]);
    assert_eq!(maj_display.maj(), 6);
    let inv_display = filling(&[&[1, 3, 5, 2, 6, 8], &[2, 4, 1, 7], &[3, 1]]);
    assert_eq!(inv_display.inv(), 3);
    assert_eq!(inv_display.quinv(), 6);

    // charge of a standard word
    assert_eq!(charge_standard(&digits("1465327")).unwrap(), 10);

    // the two decompositions of the same word
    let w = digits("121123132213");
    let classical = ls_decompose(&w).unwrap();
    let classical_subwords: Vec<String> =
        classical.subwords.iter().map(|s| s.to_string()).collect();
    assert_eq!(classical_subwords, ["321", "213", "213", "12", "1"]);
    assert_eq!(charge(&w, ChargeMethod::Classical).unwrap(), 3);
    let killpatrick = killpatrick_decompose(&w).unwrap();
    let killpatrick_subwords: Vec<String> =
        killpatrick.subwords.iter().map(|s| s.to_string()).collect();
    assert_eq!(killpatrick_subwords, ["321", "132", "213", "21", "1"]);
    let killpatrick_charges: Vec<usize> = killpatrick
        .subwords
        .iter()
        .map(|s| charge_standard(s).unwrap())
        .collect();
    assert_eq!(killpatrick_charges, [0, 2, 1, 0, 0]);

    // reading words, character for character, under both orders
    for order in [CellOrder::Standard, CellOrder::Primed] {
        assert_eq!(
            cocharge_word(&maj_display, order).to_string(),
            "121112132213"
        );
        assert_eq!(charge_word(&maj_display, order).to_string(), "312231211121");
    }

    // the maximal pair on one family of row sets
    let lam = shape(&[7, 5, 4, 2]);
    let sets = RowSets::new(vec![
        vec![1, 2, 3, 4, 5, 6, 7],
        vec![2, 5, 7, 9, 10],
        vec![6, 8, 9, 10],
        vec![7, 8],
    ])
    .unwrap();
    let inv_max = build_inv_max(&lam, &sets).unwrap();
    assert_eq!(
        inv_max,
        filling(&[
            &[7, 6, 5, 4, 3, 2, 1],
            &[7, 5, 2, 10, 9],
            &[6, 10, 9, 8],
            &[8, 7],
        ])
    );
    let quinv_max = build_quinv_max(&lam, &sets).unwrap();
    assert_eq!(
        quinv_max,
        filling(&[
            &[1, 2, 7, 3, 5, 4, 6],
            &[9, 10, 7, 2, 5],
            &[8, 9, 6, 10],
            &[7, 8],
        ])
    );
    assert_eq!(inv_max.maj(), 7);
    assert_eq!(quinv_max.maj(), 7);
    assert_eq!(phi(&inv_max).unwrap(), quinv_max);

    // the zero pair on one family of row multisets
    let multisets = RowMultisets::new(vec![
        vec![1, 2, 2, 3, 4, 4, 4],
        vec![1, 2, 3, 4, 4],
        vec![2, 2, 4, 5],
        vec![3, 5],
    ])
    .unwrap();
    let inv_zero = build_inv_zero(&lam, &multisets).unwrap();
    assert_eq!(
        inv_zero,
        filling(&[
            &[1, 2, 2, 3, 4, 4, 4],
            &[2, 3, 4, 4, 1],
            &[4, 5, 2, 2],
            &[5, 3],
        ])
    );
    let quinv_zero = build_quinv_zero(&lam, &multisets).unwrap();
    assert_eq!(
        quinv_zero,
        filling(&[
            &[2, 4, 3, 2, 1, 4, 4],
            &[3, 1, 4, 4, 2],
            &[4, 2, 5, 2],
            &[5, 3],
        ])
    );
    assert_eq!(inv_zero.maj(), 15);
    assert_eq!(quinv_zero.maj(), 15);
    assert_eq!(varphi(&inv_zero).unwrap(), quinv_zero);

    println!("acceptance 1 worked-example fidelity: PASS");
}

#[test]
fn criterion_2_macdonald_formula_equality() {
    for (max_cells, max_alphabet) in [(6usize, 3u32), (5, 4)] {
        for alphabet in 1..=max_alphabet {
            for lam in shapes_up_to(max_cells) {
                let inv = macdonald_poly(&lam, alphabet, Statistic::Inv, 1);
                let quinv = macdonald_poly(&lam, alphabet, Statistic::Quinv, 1);
                assert!(
                    inv.equals(&quinv).unwrap(),
                    "shape {lam} n={alphabet}: {}",
                    inv.diff_summary(&quinv)
                );
            }
        }
    }
    println!("acceptance 2 inv/quinv Macdonald sums equal: PASS");
}

#[test]
fn criterion_3_qt_conjugate_symmetry() {
    for alphabet in 1..=3 {
        for lam in shapes_up_to(5) {
            let swapped = macdonald_poly(&lam, alphabet, Statistic::Inv, 1).swap_qt();
            let conjugated = macdonald_poly(&lam.conjugate(), alphabet, Statistic::Inv, 1);
            assert!(
                swapped.equals(&conjugated).unwrap(),
                "shape {lam} n={alphabet}: {}",
                swapped.diff_summary(&conjugated)
            );
        }
    }
    println!("acceptance 3 q<->t conjugate symmetry: PASS");
}

#[test]
fn criterion_4_specialization_consistency() {
    for alphabet in 1..=3 {
        for lam in shapes_up_to(5) {
            let extract = q_whittaker(&lam, alphabet, WhittakerRoute::Extract, 1);
            for route in [WhittakerRoute::InvMaxSum, WhittakerRoute::QuinvMaxSum] {
                let direct = q_whittaker(&lam, alphabet, route, 1);
                assert!(
                    extract.equals(&direct).unwrap(),
                    "shape {lam} n={alphabet} {route:?}: {}",
                    extract.diff_summary(&direct)
                );
            }
            let extract = modified_hall_littlewood(&lam, alphabet, HallLittlewoodRoute::Extract, 1);
            for route in [
                HallLittlewoodRoute::InvZeroSum,
                HallLittlewoodRoute::QuinvZeroSum,
            ] {
                let direct = modified_hall_littlewood(&lam, alphabet, route, 1);
                assert!(
                    extract.equals(&direct).unwrap(),
                    "shape {lam} n={alphabet} {route:?}: {}",
                    extract.diff_summary(&direct)
                );
            }
        }
    }
    println!("acceptance 4 q-Whittaker and Hall-Littlewood routes agree: PASS");
}

#[test]
fn criterion_5_charge_equivalence() {
    fn binom2(h: usize) -> usize {
        h * h.saturating_sub(1) / 2
    }
    let mut words_checked = 0u64;
    for len in 1..=8 {
        for w in partition_content_words(len, 4) {
            let classical = charge(&w, ChargeMethod::Classical).unwrap();
            let killpatrick = charge(&w, ChargeMethod::Killpatrick).unwrap();
            assert_eq!(classical, killpatrick, "word {w}");
            let mu = w.content();
            let max_mult = mu.counts().iter().copied().max().unwrap_or(0);
            let complement: usize = (1..=max_mult)
                .map(|k| binom2(mu.counts().iter().filter(|&&c| c >= k).count()))
                .sum();
            assert_eq!(
                macfill::charge::cocharge(&w).unwrap(),
                complement - classical,
                "word {w}"
            );
            words_checked += 1;
        }
    }
    println!("acceptance 5 charge equivalence over {words_checked} words: PASS");
}

#[test]
fn criterion_6_extremal_uniqueness() {
    let mut constructions_checked = 0u64;
    for lam in shapes_up_to(6) {
        match extremal_uniqueness_sweep(&lam, 3) {
            Ok(constructions) => constructions_checked += constructions.len() as u64,
            Err(witness) => panic!("shape {lam}: {witness}"),
        }
    }
    println!("acceptance 6 extremal uniqueness ({constructions_checked} constructions): PASS");
}

#[test]
fn criterion_7_maj_identities() {
    let mut fillings_checked = 0u64;
    for lam in shapes_up_to(6) {
        let constructions = extremal_uniqueness_sweep(&lam, 3).unwrap_or_else(|witness| {
            panic!("shape {lam}: {witness}");
        });
        for (class, f) in constructions {
            check_maj_identity(class, &f).unwrap_or_else(|witness| {
                panic!("shape {lam}: {witness}");
            });
            fillings_checked += 1;
        }
    }
    println!("acceptance 7 maj identities on {fillings_checked} extremal fillings: PASS");
}

#[test]
fn criterion_8_conjecture_at_desk_scale() {
    for lam in shapes_up_to(6) {
        let inv = stat_profile(&lam, 3, Statistic::Inv, 1);
        let quinv = stat_profile(&lam, 3, Statistic::Quinv, 1);
        assert_eq!(inv, quinv, "profiles differ on shape {lam}");
        let pairs = conjecture_match(&lam, 3).unwrap_or_else(|e| {
            panic!("shape {lam}: {e}");
        });
        assert_eq!(pairs.len() as u64, filling_count(&lam, 3));
        for p in &pairs {
            assert!(p.sigma.row_equivalent(&p.delta));
            assert_eq!(p.sigma.maj(), p.delta.maj());
            assert_eq!(p.sigma.quinv(), p.delta.inv());
        }
    }
    println!("acceptance 8 conjecture profiles and matching: PASS");
}

#[test]
fn criterion_9_thread_determinism() {
    let single = VerifyOptions {
        max_cells: 5,
        alphabet: 3,
        max_word_len: 6,
        max_letter: 3,
        shape: None,
        threads: 1,
    };
    let threaded = VerifyOptions {
        threads: 4,
        ..single.clone()
    };
    for suite in Suite::ALL {
        let a = run_suite(suite, &single).render();
        let b = run_suite(suite, &threaded).render();
        assert_eq!(a.as_bytes(), b.as_bytes(), "suite {suite} differs");
    }
    println!("acceptance 9 report determinism across thread counts: PASS");
}

use codesign::acceptance::{catalog_codes, catalog_of_designs};
use codesign::bridge::{design_from_code, todd_check};
use codesign::constructions::{catalog_design, golay, GolayVariant};
use codesign::design::{
    complement, counting_identities, derived, design_params, fisher_check, is_admissible, Admissibility,
    DesignParams,
};
use codesign::enumerators::{perfect_radius, perfectness_from, weight_distribution};
use codesign::io::{parse_code, parse_design, write_code, write_design};
use codesign::{Design, Error};

const BUDGET: u128 = 1 << 28;

fn octads() -> Design {
    design_from_code(&golay(GolayVariant::B24Hexacode).unwrap(), 8, BUDGET).unwrap()
}

fn params(d: &Design, t: usize) -> Option<DesignParams> {
    design_params(d, t, 1 << 27).unwrap()
}

#[test]
fn perfect_codes_in_the_catalog() {
    let perfect = ["hamming(2,3)", "hamming(2,4)", "hamming(2,5)", "hamming(3,2)", "hamming(3,3)", "hamming(4,2)", "hamming(5,2)", "qr(7,2)", "qr(23,2)", "qr(11,3)", "t11_circulant"];
    for (name, c) in catalog_codes().unwrap() {
        let (n, k, q) = (c.n(), c.k(), c.q());
        let verdict = match perfect_radius(n, k, q) {
            None => false,
            Some(e) if c.size() <= BUDGET => {
                let d = weight_distribution(&c, BUDGET).unwrap().min_weight().unwrap();
                let report = perfectness_from(n, k, q, d);
                assert_eq!(report.perfect, report.e == e, "{name}");
                report.perfect
            }
            Some(_) => panic!("{name}: perfect parameters but too large to check"),
        };
        assert_eq!(verdict, perfect.contains(&name.as_str()), "{name}");
    }
}

#[test]
fn witt_chain_by_derivation() {
    let mut d = octads();
    let expect = [(5, 24, 8, 1), (4, 23, 7, 1), (3, 22, 6, 1), (2, 21, 5, 1)];
    for (i, &(t, v, k, lambda)) in expect.iter().enumerate() {
        assert_eq!(params(&d, t), Some(DesignParams { t, v, k, lambda }));
        if i + 1 < expect.len() {
            d = derived(&d, 0).unwrap();
        }
    }
    assert_eq!(d.b(), 21);
}

#[test]
fn octad_complements() {
    let c = complement(&octads()).unwrap();
    assert_eq!(c.b(), 759);
    assert_eq!(params(&c, 5), Some(DesignParams { t: 5, v: 24, k: 16, lambda: 78 }));
    assert_eq!(complement(&c).unwrap(), octads());
}

#[test]
fn counting_identities_for_known_designs() {
    let ids = counting_identities(&catalog_design("sqs8").unwrap(), BUDGET).unwrap();
    assert_eq!((ids.b, ids.r), (14, 7));
    assert_eq!(ids.params, DesignParams { t: 3, v: 8, k: 4, lambda: 1 });
    assert!(ids.all_hold());

    let ids = counting_identities(&octads(), BUDGET).unwrap();
    assert_eq!((ids.b, ids.r), (759, 253));
    assert_eq!(ids.params, DesignParams { t: 5, v: 24, k: 8, lambda: 1 });
    assert!(ids.all_hold());

    for (name, d) in catalog_of_designs().unwrap() {
        assert!(counting_identities(&d, BUDGET).unwrap().all_hold(), "{name}");
    }
}

#[test]
fn fisher_on_small_designs() {
    assert!(fisher_check(&catalog_design("fano").unwrap(), 2, BUDGET).unwrap());
    assert!(fisher_check(&catalog_design("sqs8").unwrap(), 3, BUDGET).unwrap());
    assert!(fisher_check(&catalog_design("sqs8").unwrap(), 2, BUDGET).unwrap());
    assert_eq!(fisher_check(&catalog_design("fano").unwrap(), 1, BUDGET), Err(Error::TrivialDesign));
}

#[test]
fn admissibility_examples() {
    let ok = |t, v, k, l| is_admissible(&DesignParams::new(t, v, k, l).unwrap());
    assert_eq!(ok(5, 24, 8, 1), Admissibility::Admissible);
    assert_eq!(ok(2, 7, 3, 1), Admissibility::Admissible);
    assert_eq!(ok(5, 12, 6, 1), Admissibility::Admissible);
    assert!(matches!(ok(2, 8, 3, 1), Admissibility::Inadmissible { .. }));
}

#[test]
fn todd_rejects_a_corrupted_octad_set() {
    let d = octads();
    assert!(todd_check(&d).unwrap());
    let mut blocks = d.blocks().to_vec();
    // swap one point of one octad for a point outside it
    let outside = (0..24u32).find(|p| !blocks[0].contains(p)).unwrap();
    blocks[0][7] = outside;
    blocks[0].sort();
    if let Ok(bad) = Design::new(24, blocks) {
        assert!(!todd_check(&bad).unwrap());
    }
    assert!(todd_check(&catalog_design("fano").unwrap()).is_err());
}

#[test]
fn io_round_trips() {
    for (name, c) in catalog_codes().unwrap() {
        assert_eq!(parse_code(&write_code(&c)).unwrap(), c, "{name}");
    }
    for (name, d) in catalog_of_designs().unwrap() {
        assert_eq!(parse_design(&write_design(&d)).unwrap(), d, "{name}");
    }
    let oct = octads();
    assert_eq!(parse_design(&write_design(&oct)).unwrap(), oct);
}

#[test]
fn golay_variants_agree_on_distributions() {
    let binary: Vec<_> = GolayVariant::ALL
        .into_iter()
        .filter(|v| v.params().1 == 24)
        .map(|v| weight_distribution(&golay(v).unwrap(), BUDGET).unwrap())
        .collect();
    assert!(binary.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(binary[0].pairs(), vec![(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]);
    let t12 = weight_distribution(&golay(GolayVariant::T12Extend).unwrap(), BUDGET).unwrap();
    assert_eq!(t12.pairs(), vec![(0, 1), (6, 264), (9, 440), (12, 24)]);
}

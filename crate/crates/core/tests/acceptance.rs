//! End-to-end acceptance suite: one test per criterion, each printing its
//! own pass/fail line through the harness. Expected values are the worked
//! examples and dimension tables; tolerances are exact throughout.


use parkhopf::coeffs::{
    self, check_all_axioms, check_duality_adjunction, pairing, primitive_dim, rat,
    tensor_pairing, totally_primitive_dim, LinComb, Tensor,
};
use parkhopf::cqsym::{
    self, ch_map, check_splitting, check_splitting3, contributing_matrices, delta_star_mm,
    gamma_embed, internal_pcat, internal_pcat_elem, jn, mm_product, ndpf_basis, pcat_coproduct,
    pcat_product, prime_count_by_enumeration, prime_count_by_partition, rcat_expand,
    rcat_product, CqsymMm, CqsymPcat, MmKey, Ndpf, PcatKey, RcatKey,
};
use parkhopf::ncsf::{
    check_f_g_system, check_g_counts_parking, f_component, lagrange_g, s_product,
    schroder_closed_form, sqsym_dim_via_ribbons, SKey,
};
use parkhopf::pqsym::{
    check_bidendriform_g, check_codendriform_g, check_dendriform_g, check_trid_partition,
    check_tridendriform_g, delta_internal_g, eta, f_antipode, f_coproduct, f_half_coproducts,
    f_product, g_coproduct, g_dend_parts, g_half_coproducts, g_product, g_trid_parts,
    internal_f, phi_embed, qsym_f_product, v_basis, FKey, FqKey, GKey, PqsymF, PqsymG,
};
use parkhopf::realize::{check_g_realization_product, check_matrix_model, check_ordered_sum,
    check_word_tridendriform};
use parkhopf::scqsym::{
    detassmax, fsc_in_qsc, fsc_product, psc_coproduct, psc_product, psev, qsc_coproduct,
    qsc_product, segmented_compositions, segperm_shuffle, FscKey, PscKey, QscKey, ScqsymPsc,
    ScqsymQsc, SegmentedComposition, SegmentedPermutation,
};
use parkhopf::series::{named_series, narayana_at, Named};
use parkhopf::sqsym::{
    ps_product, psymbol, qs_product, rs_expand, rs_product, schroder_backward,
    schroder_forward, segmented_words, PsKey, QsKey, RsKey, SchroderBranch, SegmentedWord,
    SqsymPs, SqsymQs,
};
use parkhopf::words::{
    catalan, compositions, nondecreasing_parking_functions, parking_count, parking_functions,
    partitions, permutations, prime_parking_functions, Composition, ParkingFunction, Word,
};

fn pf(s: &str) -> ParkingFunction {
    s.parse().unwrap()
}

fn nd(s: &str) -> Ndpf {
    s.parse().unwrap()
}

fn sw(s: &str) -> SegmentedWord {
    s.parse().unwrap()
}

fn sc(s: &str) -> SegmentedComposition {
    s.parse().unwrap()
}

fn f_sum(terms: &str) -> LinComb<FKey> {
    LinComb::from_keys(terms.split_whitespace().map(|s| FKey(pf(s))))
}

fn g_sum(terms: &str) -> LinComb<GKey> {
    LinComb::from_keys(terms.split_whitespace().map(|s| GKey(pf(s))))
}

/// Deterministic splitmix64 for the sampled checks.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[(self.next() % items.len() as u64) as usize]
    }
}

#[test]
fn criterion_01_dimension_tables() {
    let pf_dims: Vec<usize> = (1..=5).map(|n| parking_functions(n).len()).collect();
    assert_eq!(pf_dims, [1, 3, 16, 125, 1296]);
    for n in 1..=5u64 {
        assert_eq!(parking_count(n), pf_dims[n as usize - 1] as u128);
    }
    let prime_dims: Vec<usize> = (1..=5).map(|n| prime_parking_functions(n).len()).collect();
    assert_eq!(prime_dims, [1, 1, 4, 27, 256]);
    let nd_dims: Vec<usize> = (1..=5)
        .map(|n| nondecreasing_parking_functions(n).len())
        .collect();
    assert_eq!(nd_dims, [1, 2, 5, 14, 42]);
    for n in 1..=5u64 {
        assert_eq!(catalan(n), nd_dims[n as usize - 1] as u128);
    }
    let class_dims: Vec<usize> = (1..=5).map(|n| segmented_words(n).len()).collect();
    assert_eq!(class_dims, [1, 3, 11, 45, 197]);
    for n in 1..=8usize {
        assert_eq!(segmented_compositions(n).len(), 3usize.pow(n as u32 - 1));
    }
}

#[test]
fn criterion_02_type_histogram() {
    let mut hist: std::collections::BTreeMap<Vec<u32>, usize> = Default::default();
    for a in parking_functions(4) {
        *hist.entry(a.type_composition().parts().to_vec()).or_default() += 1;
    }
    let get = |p: &[u32]| hist.get(p).copied().unwrap_or(0);
    assert_eq!(get(&[4]), 27);
    assert_eq!(get(&[3, 1]), 16);
    assert_eq!(get(&[1, 3]), 16);
    assert_eq!(get(&[2, 2]), 6);
    assert_eq!(get(&[2, 1, 1]), 12);
    assert_eq!(get(&[1, 2, 1]), 12);
    assert_eq!(get(&[1, 1, 2]), 12);
    assert_eq!(get(&[1, 1, 1, 1]), 24);
}

#[test]
fn criterion_03_golden_expansions() {
    let mut covered = 0usize;
    // products in the F basis
    assert_eq!(f_product(&pf("1"), &pf("1")), f_sum("12 21"));
    assert_eq!(f_product(&pf("1"), &pf("11")), f_sum("122 212 221"));
    assert_eq!(f_product(&pf("1"), &pf("12")), f_sum("123 213 231"));
    assert_eq!(f_product(&pf("1"), &pf("21")), f_sum("132 312 321"));
    assert_eq!(
        f_product(&pf("12"), &pf("11")),
        f_sum("1233 1323 1332 3123 3132 3312")
    );
    let big = f_product(&pf("211"), &pf("131"));
    assert_eq!(big.len(), 20);
    assert_eq!(
        big,
        f_sum(
            "211464 214164 214614 214641 241164 241614 241641 246114 246141 246411 \
             421164 421614 421641 426114 426141 426411 462114 462141 462411 464211"
        )
    );
    covered += 6;
    // coproducts in the F basis
    let f_tensor = |pairs: &[(&str, &str)]| {
        let mut t = Tensor::zero();
        for (l, r) in pairs {
            t.add_term(FKey(pf(l)), FKey(pf(r)), rat(1));
        }
        t
    };
    assert_eq!(
        f_coproduct(&pf("121")),
        f_tensor(&[("e", "121"), ("1", "21"), ("12", "1"), ("121", "e")])
    );
    assert_eq!(
        f_coproduct(&pf("131")),
        f_tensor(&[("e", "131"), ("1", "21"), ("12", "1"), ("131", "e")])
    );
    assert_eq!(
        f_coproduct(&pf("3132")),
        f_tensor(&[
            ("e", "3132"),
            ("1", "132"),
            ("21", "21"),
            ("212", "1"),
            ("3132", "e")
        ])
    );
    assert_eq!(
        f_coproduct(&pf("1643165")),
        f_tensor(&[
            ("e", "1643165"),
            ("1", "532154"),
            ("12", "32154"),
            ("132", "2143"),
            ("1432", "132"),
            ("15431", "21"),
            ("154315", "1"),
            ("1643165", "e")
        ])
    );
    covered += 4;
    // antipode
    assert_eq!(
        f_antipode(&pf("122")),
        f_sum("212 221").sub(&f_sum("213 231 321"))
    );
    covered += 1;
    // products in the G basis
    assert_eq!(g_product(&pf("1"), &pf("1")), g_sum("11 12 21"));
    assert_eq!(g_product(&pf("1"), &pf("11")), g_sum("111 122 211 311"));
    assert_eq!(
        g_product(&pf("1"), &pf("12")),
        g_sum("112 113 123 212 213 312")
    );
    assert_eq!(
        g_product(&pf("1"), &pf("21")),
        g_sum("121 131 132 221 231 321")
    );
    assert_eq!(
        g_product(&pf("12"), &pf("11")),
        g_sum("1211 1222 1233 1311 1322 1411 1422 2311 2411 3411")
    );
    assert_eq!(
        g_product(&pf("211"), &pf("131")),
        g_sum(
            "211131 211141 211151 211161 211242 211252 211262 211353 211363 211464 \
             322131 322141 322151 322161 433131 433141 433151 433161 544131"
        )
    );
    covered += 6;
    // coproducts in the G basis
    let g_tensor = |pairs: &[(&str, &str)]| {
        let mut t = Tensor::zero();
        for (l, r) in pairs {
            t.add_term(GKey(pf(l)), GKey(pf(r)), rat(1));
        }
        t
    };
    assert_eq!(
        g_coproduct(&pf("121")),
        g_tensor(&[("e", "121"), ("121", "e")])
    );
    assert_eq!(
        g_coproduct(&pf("131")),
        g_tensor(&[("e", "131"), ("11", "1"), ("131", "e")])
    );
    assert_eq!(
        g_coproduct(&pf("3132")),
        g_tensor(&[("e", "3132"), ("1", "221"), ("12", "11"), ("3132", "e")])
    );
    assert_eq!(
        g_coproduct(&pf("164821657")),
        g_tensor(&[
            ("e", "164821657"),
            ("121", "315324"),
            ("1421", "24213"),
            ("14215", "1312"),
            ("164821657", "e")
        ])
    );
    covered += 4;
    // dendriform and tridendriform splittings of the G product
    let (l, m, r) = g_trid_parts(&pf("12"), &pf("212"));
    assert_eq!(
        l,
        g_sum(
            "13212 14212 14313 14323 15212 15313 15323 24313 24212 34212 23212 \
             25212 25313 35212 45212"
        )
    );
    assert_eq!(l.len(), 15);
    assert_eq!(m, g_sum("12212 13313 13323 23313"));
    assert_eq!(r, g_sum("12313 12323 12414 12424 12434 13414 13424 23414"));
    let (_, dr) = g_dend_parts(&pf("12"), &pf("212"));
    assert_eq!(
        dr,
        g_sum("12212 12313 12323 12414 12424 12434 13313 13323 13414 13424 23313 23414")
    );
    covered += 4;
    // half coproducts
    let (hl, hr) = g_half_coproducts(&pf("1252754"));
    assert_eq!(hl, g_tensor(&[("125254", "1"), ("1224", "131")]));
    assert_eq!(hr, g_tensor(&[("122", "2421"), ("1", "141643")]));
    covered += 2;
    // dual internal coproduct
    let delta = delta_internal_g(&pf("4121"));
    let mut expect = Tensor::zero();
    for l in ["2111", "3111", "4111"] {
        for r in ["1232", "1121", "2121", "3121", "4121"] {
            expect.add_term(GKey(pf(l)), GKey(pf(r)), rat(1));
        }
    }
    expect.add_term(GKey(pf("1111")), GKey(pf("4121")), rat(1));
    assert_eq!(delta, expect);
    covered += 1;
    // PCat products and coproduct with its coefficient 2
    assert_eq!(pcat_product(&nd("11"), &nd("1233")), PcatKey(nd("113455")));
    assert_eq!(
        pcat_product(&nd("1124"), &nd("1223")),
        PcatKey(nd("11245667"))
    );
    let d1124 = pcat_coproduct(&nd("1124"));
    assert_eq!(d1124.coeff(&PcatKey(nd("12")), &PcatKey(nd("12"))), rat(2));
    assert_eq!(d1124.coeff(&PcatKey(nd("11")), &PcatKey(nd("12"))), rat(1));
    assert_eq!(d1124.coeff(&PcatKey(nd("1")), &PcatKey(nd("113"))), rat(1));
    covered += 3;
    // MM products with the coefficient 3
    let mm1_12 = mm_product(&nd("1"), &nd("12"));
    assert_eq!(mm1_12.coeff(&MmKey(nd("123"))), rat(3));
    assert_eq!(mm1_12.len(), 4);
    assert_eq!(mm_product(&nd("12"), &nd("11")).len(), 10);
    covered += 2;
    // Catalan ribbons
    let expansion = parkhopf::cqsym::pcat_in_rcat(&nd("113346"));
    assert_eq!(expansion.len(), 8);
    let inverse = rcat_expand(&nd("113346"));
    assert_eq!(inverse.coeff(&PcatKey(nd("113333"))), rat(1));
    assert_eq!(inverse.coeff(&PcatKey(nd("113336"))), rat(-1));
    assert_eq!(
        rcat_product(&nd("11224"), &nd("113")),
        LinComb::from_keys([RcatKey(nd("11224668")), RcatKey(nd("11224448"))])
    );
    assert_eq!(
        rcat_product(&nd("113"), &nd("11224")),
        LinComb::from_keys([RcatKey(nd("11344557")), RcatKey(nd("11333557"))])
    );
    covered += 4;
    // dual internal coproduct on MM
    assert_eq!(delta_star_mm(&nd("112")), {
        let mut t = Tensor::zero();
        t.add_term(MmKey(nd("111")), MmKey(nd("112")), rat(1));
        t
    });
    let d113 = delta_star_mm(&nd("113"));
    let mut expect = Tensor::zero();
    for l in ["112", "113"] {
        for r in ["111", "112", "113", "122"] {
            expect.add_term(MmKey(nd(l)), MmKey(nd(r)), rat(1));
        }
    }
    expect.add_term(MmKey(nd("111")), MmKey(nd("113")), rat(1));
    assert_eq!(d113, expect);
    covered += 2;
    // γ on the monomial basis
    assert_eq!(
        gamma_embed(&Composition::new(vec![2, 1])),
        LinComb::from_keys([MmKey(nd("112")), MmKey(nd("113"))])
    );
    assert_eq!(
        gamma_embed(&Composition::new(vec![3])),
        LinComb::unit(MmKey(nd("111")))
    );
    covered += 1;
    // Schröder classes and products
    assert_eq!(psymbol(&pf("131")), sw("11|3"));
    assert_eq!(psymbol(&pf("311")), sw("11|3"));
    for s in ["1324", "3124", "1342", "3142", "3412"] {
        assert_eq!(psymbol(&pf(s)), sw("12|34"));
    }
    assert_eq!(
        ps_product(&sw("11|335|6"), &sw("112")),
        LinComb::from_keys([PsKey(sw("11|335|6778")), PsKey(sw("11|335|6|778"))])
    );
    assert_eq!(
        qs_product(&sw("1|2"), &sw("1")),
        LinComb::from_keys(
            ["1|23", "1|22", "12|3", "11|3", "11|2", "1|2|3"]
                .iter()
                .map(|s| QsKey(sw(s)))
        )
    );
    let dps = parkhopf::sqsym::ps_coproduct(&sw("11|3"));
    let mut expect = Tensor::zero();
    for (l, r) in [
        ("e", "11|3"),
        ("1", "1|2"),
        ("1", "11"),
        ("1|2", "1"),
        ("12", "1"),
        ("11|3", "e"),
    ] {
        expect.add_term(PsKey(sw(l)), PsKey(sw(r)), rat(1));
    }
    assert_eq!(dps, expect);
    let dqs = parkhopf::sqsym::qs_coproduct(&sw("11|34|55"));
    let mut expect = Tensor::zero();
    for (l, r) in [
        ("e", "11|34|55"),
        ("11", "12|33"),
        ("11|3", "1|22"),
        ("11|34", "11"),
        ("11|34|55", "e"),
    ] {
        expect.add_term(QsKey(sw(l)), QsKey(sw(r)), rat(1));
    }
    assert_eq!(dqs, expect);
    covered += 5;
    // Schröder ribbons
    assert_eq!(parkhopf::sqsym::ps_in_rs(&sw("11|34")), {
        let mut e = LinComb::zero();
        e.add_term(RsKey(sw("11|34")), rat(1));
        e.add_term(RsKey(sw("11|33")), rat(1));
        e
    });
    let rs_exp = rs_expand(&sw("11|3346"));
    assert_eq!(rs_exp.coeff(&PsKey(sw("11|3346"))), rat(1));
    assert_eq!(rs_exp.coeff(&PsKey(sw("11|3336"))), rat(-1));
    assert_eq!(rs_exp.coeff(&PsKey(sw("11|3344"))), rat(-1));
    assert_eq!(rs_exp.coeff(&PsKey(sw("11|3333"))), rat(1));
    assert_eq!(rs_exp.len(), 4);
    assert_eq!(
        rs_product(&sw("11|3"), &sw("113")),
        LinComb::from_keys([
            RsKey(sw("11|3|446")),
            RsKey(sw("11|3446")),
            RsKey(sw("11|3336"))
        ])
    );
    assert_eq!(
        rs_product(&sw("1"), &sw("1|2")),
        LinComb::from_keys([RsKey(sw("1|2|3")), RsKey(sw("12|3")), RsKey(sw("11|3"))])
    );
    covered += 4;
    // QSC as sums of QS classes
    let qsc_of = |target: &SegmentedComposition| -> Vec<SegmentedWord> {
        segmented_words(target.weight() as usize)
            .into_iter()
            .filter(|q| psev(q) == *target)
            .collect()
    };
    assert_eq!(qsc_of(&sc("12|1")), vec![sw("122|3"), sw("122|4")]);
    assert_eq!(qsc_of(&sc("121")), vec![sw("1223"), sw("1224")]);
    assert_eq!(
        qsc_of(&sc("12|21")),
        vec![
            sw("122|334"),
            sw("122|335"),
            sw("122|336"),
            sw("122|445"),
            sw("122|446")
        ]
    );
    covered += 3;
    // segmented compositions: products, coproducts, shuffles
    assert_eq!(psc_product(&sc("12|1"), &sc("2|11")), {
        let mut e = LinComb::unit(PscKey(sc("12|12|11")));
        e.add_term(PscKey(sc("12|1|2|11")), rat(1));
        e
    });
    assert_eq!(
        qsc_product(&sc("1"), &sc("2|1")),
        LinComb::from_keys(
            ["3|1", "12|1", "2|2", "2|1|1", "2|11"].iter().map(|s| QscKey(sc(s)))
        )
    );
    let square = qsc_product(&sc("1|1"), &sc("1|1"));
    assert_eq!(square.coeff(&QscKey(sc("1|11|1"))), rat(2));
    assert_eq!(square.coeff(&QscKey(sc("1|2|1"))), rat(2));
    assert_eq!(square.len(), 11);
    assert_eq!(qsc_coproduct(&sc("12|1")), {
        let mut t = Tensor::zero();
        for (l, r) in [("e", "12|1"), ("1", "2|1"), ("12", "1"), ("12|1", "e")] {
            t.add_term(QscKey(sc(l)), QscKey(sc(r)), rat(1));
        }
        t
    });
    let dpsc = psc_coproduct(&sc("12|1"));
    assert_eq!(dpsc.coeff(&PscKey(sc("1")), &PscKey(sc("2|1"))), rat(1));
    assert_eq!(dpsc.coeff(&PscKey(sc("11")), &PscKey(sc("2"))), rat(1));
    assert_eq!(dpsc.coeff(&PscKey(sc("1|1")), &PscKey(sc("2"))), rat(1));
    assert_eq!(dpsc.coeff(&PscKey(sc("11|1")), &PscKey(sc("1"))), rat(1));
    covered += 5;
    // FSC
    assert_eq!(
        fsc_in_qsc(&sc("2|2")),
        LinComb::from_keys(
            ["11|11", "2|11", "11|2", "2|2"].iter().map(|s| QscKey(sc(s)))
        )
    );
    assert_eq!(
        fsc_product(&sc("1"), &sc("11|1")),
        LinComb::from_keys(
            ["21|1", "1|2|1", "11|2", "11|1|1"].iter().map(|s| FscKey(sc(s)))
        )
    );
    assert_eq!(
        fsc_product(&sc("1"), &sc("2|1")),
        LinComb::from_keys(
            ["3|1", "1|2|1", "2|2", "2|1|1"].iter().map(|s| FscKey(sc(s)))
        )
    );
    covered += 3;
    // segmented permutations
    let alpha: SegmentedPermutation = "2|1".parse().unwrap();
    let beta: SegmentedPermutation = "21".parse().unwrap();
    let mut expect: Vec<SegmentedPermutation> =
        ["2|143", "24|13", "243|1", "4|2|13", "4|23|1", "43|2|1"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
    expect.sort();
    assert_eq!(segperm_shuffle(&alpha, &beta), expect);
    let gamma: SegmentedPermutation = "248|517|3".parse().unwrap();
    assert_eq!(gamma.descent_composition(), sc("3|12|1"));
    covered += 2;
    // noncommutative Lagrange values
    let g3 = lagrange_g(3);
    assert_eq!(g3.coeff(&SKey(Composition::new(vec![3]))), rat(1));
    assert_eq!(g3.coeff(&SKey(Composition::new(vec![2, 1]))), rat(2));
    assert_eq!(g3.coeff(&SKey(Composition::new(vec![1, 2]))), rat(1));
    assert_eq!(g3.coeff(&SKey(Composition::new(vec![1, 1, 1]))), rat(1));
    assert_eq!(g3.len(), 4);
    let f3 = f_component(3);
    assert_eq!(
        f3,
        {
            let mut e = LinComb::unit(SKey(Composition::new(vec![3])));
            e.add_term(SKey(Composition::new(vec![2, 1])), rat(1));
            e
        }
    );
    covered += 2;
    assert!(covered >= 30, "only {covered} golden groups covered");
}

#[test]
fn criterion_04_internal_products() {
    assert_eq!(internal_f(&pf("211"), &pf("211")), pf("311"));
    assert_eq!(
        internal_f(&pf("31143231"), &pf("23571713")),
        pf("61385451")
    );
    let prod = internal_pcat(&nd("1123"), &nd("1224"));
    let mut expect = LinComb::zero();
    expect.add_term(PcatKey(nd("1134")), rat(2));
    expect.add_term(PcatKey(nd("1234")), rat(5));
    assert_eq!(prod, expect);
    assert_eq!(contributing_matrices(&nd("1123"), &nd("1224")).len(), 7);
    // associativity of both internal products at degree 3
    let all = parking_functions(3);
    for a in &all {
        for b in &all {
            let ab = internal_f(a, b);
            for c in &all {
                assert_eq!(internal_f(&ab, c), internal_f(a, &internal_f(b, c)));
            }
        }
    }
    let basis = ndpf_basis(3);
    for a in &basis {
        for b in &basis {
            let ab = internal_pcat(a, b);
            for c in &basis {
                let lhs = internal_pcat_elem(&ab, &LinComb::unit(PcatKey(c.clone())));
                let rhs =
                    internal_pcat_elem(&LinComb::unit(PcatKey(a.clone())), &internal_pcat(b, c));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn criterion_05_hopf_axioms_and_duality() {
    check_all_axioms(&PqsymF, 4).unwrap();
    check_all_axioms(&PqsymG, 4).unwrap();
    check_all_axioms(&SqsymPs, 4).unwrap();
    check_all_axioms(&SqsymQs, 4).unwrap();
    check_all_axioms(&CqsymPcat, 4).unwrap();
    check_all_axioms(&CqsymMm, 4).unwrap();
    check_all_axioms(&ScqsymPsc, 4).unwrap();
    check_all_axioms(&ScqsymQsc, 4).unwrap();
    check_duality_adjunction(&PqsymF, &PqsymG, 4).unwrap();
    check_duality_adjunction(&PqsymG, &PqsymF, 4).unwrap();
    check_duality_adjunction(&SqsymPs, &SqsymQs, 4).unwrap();
    check_duality_adjunction(&SqsymQs, &SqsymPs, 4).unwrap();
    check_duality_adjunction(&CqsymPcat, &CqsymMm, 4).unwrap();
    check_duality_adjunction(&CqsymMm, &CqsymPcat, 4).unwrap();
    check_duality_adjunction(&ScqsymPsc, &ScqsymQsc, 4).unwrap();
    check_duality_adjunction(&ScqsymQsc, &ScqsymPsc, 4).unwrap();
    // sampled duality at degree 5 for the big pair
    let mut rng = Rng(42);
    let all5 = parking_functions(5);
    for _ in 0..25 {
        let d1 = 1 + (rng.next() % 4) as usize;
        let d2 = 5 - d1;
        let x = rng.pick(&parking_functions(d1)).clone();
        let y = rng.pick(&parking_functions(d2)).clone();
        let z = rng.pick(&all5).clone();
        let lhs = pairing(&f_product(&x, &y), &LinComb::unit(GKey(z.clone())));
        let rhs = tensor_pairing(
            &Tensor::of(&LinComb::unit(FKey(x)), &LinComb::unit(FKey(y))),
            &g_coproduct(&z),
        );
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn criterion_06_bidendriform_and_tridendriform() {
    check_dendriform_g(4).unwrap();
    check_codendriform_g(4).unwrap();
    check_bidendriform_g(4).unwrap();
    check_tridendriform_g(4).unwrap();
    check_word_tridendriform(6, 4).unwrap();
    check_trid_partition(5).unwrap();
}

#[test]
fn criterion_07_primitive_dimensions() {
    let basis3: Vec<FKey> = parking_functions(3).into_iter().map(FKey).collect();
    let tp_f = totally_primitive_dim(
        &basis3,
        |k| f_half_coproducts(&k.0).0,
        |k| f_half_coproducts(&k.0).1,
    );
    assert_eq!(tp_f, 7);
    let gbasis3: Vec<GKey> = parking_functions(3).into_iter().map(GKey).collect();
    let tp_g = totally_primitive_dim(
        &gbasis3,
        |k| g_half_coproducts(&k.0).0,
        |k| g_half_coproducts(&k.0).1,
    );
    assert_eq!(tp_g, 7);
    // the printed degree-3 bases are totally primitive
    let f_elems: Vec<LinComb<FKey>> = vec![
        f_sum("123 111").sub(&f_sum("122 112")),
        f_sum("311").sub(&f_sum("211")),
        f_sum("113").sub(&f_sum("112")),
        f_sum("131").sub(&f_sum("121")),
        f_sum("132").sub(&f_sum("131")),
        f_sum("231").sub(&f_sum("121")),
        f_sum("213").sub(&f_sum("212")),
    ];
    for x in &f_elems {
        let mut left = Tensor::zero();
        let mut right = Tensor::zero();
        for (k, c) in x.iter() {
            let (l, r) = f_half_coproducts(&k.0);
            left = left.add(&l.scale(c));
            right = right.add(&r.scale(c));
        }
        assert!(left.is_zero() && right.is_zero(), "F element {x}");
    }
    let g_elems: Vec<LinComb<GKey>> = vec![
        g_sum("122").sub(&g_sum("212")),
        g_sum("131").sub(&g_sum("311")),
        g_sum("312").sub(&g_sum("132")),
        g_sum("111"),
        g_sum("112"),
        g_sum("121"),
        g_sum("211"),
    ];
    for x in &g_elems {
        let mut left = Tensor::zero();
        let mut right = Tensor::zero();
        for (k, c) in x.iter() {
            let (l, r) = g_half_coproducts(&k.0);
            left = left.add(&l.scale(c));
            right = right.add(&r.scale(c));
        }
        assert!(left.is_zero() && right.is_zero(), "G element {x}");
    }
    assert_eq!(primitive_dim(&SqsymQs, 3), 6);
    assert_eq!(primitive_dim(&SqsymPs, 3), 7);
    let dims: Vec<usize> = (1..=4).map(|n| primitive_dim(&CqsymPcat, n)).collect();
    assert_eq!(dims, [1, 1, 3, 8]);
    // the printed primitive bases in degree 3 of both Schröder algebras
    let qs_elems: Vec<LinComb<QsKey>> = vec![
        LinComb::unit(QsKey(sw("111"))),
        LinComb::unit(QsKey(sw("112"))),
        LinComb::unit(QsKey(sw("11|2"))),
        LinComb::unit(QsKey(sw("122"))).sub(&LinComb::unit(QsKey(sw("1|22")))),
        LinComb::unit(QsKey(sw("113"))).sub(&LinComb::unit(QsKey(sw("11|3")))),
        LinComb::unit(QsKey(sw("123")))
            .sub(&LinComb::unit(QsKey(sw("1|23"))))
            .sub(&LinComb::unit(QsKey(sw("12|3"))))
            .add(&LinComb::unit(QsKey(sw("1|2|3")))),
    ];
    for x in &qs_elems {
        assert!(coeffs::is_primitive(&SqsymQs, x), "QS element {x}");
    }
    let ps = |s: &str| LinComb::unit(PsKey(sw(s)));
    // the displayed seventh vector is not annihilated by the reduced
    // coproduct; solving for the kernel element supported on 1|2|3 gives
    // PS_(1|2|3) - PS_(1|22) + PS_112 instead
    let ps_elems: Vec<LinComb<PsKey>> = vec![
        ps("123").sub(&ps("112")).sub(&ps("122")).add(&ps("111")),
        ps("1|22").sub(&ps("11|2")).sub(&ps("112")).add(&ps("122")),
        ps("1|23").sub(&ps("11|2")).sub(&ps("112")).add(&ps("111")),
        ps("12|3").sub(&ps("11|2")).sub(&ps("112")).add(&ps("111")),
        ps("113").sub(&ps("112")),
        ps("11|3").sub(&ps("11|2")),
        ps("1|2|3").sub(&ps("1|22")).add(&ps("112")),
    ];
    for x in &ps_elems {
        assert!(coeffs::is_primitive(&SqsymPs, x), "PS element {x}");
    }
}

#[test]
fn criterion_08_realizations() {
    // word-polynomial model of the G basis, stable under k -> k + 2
    for (d1, d2) in coeffs::degree_pairs(4) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for a in parking_functions(d1) {
            for b in parking_functions(d2) {
                check_g_realization_product(&a, &b, 8).unwrap();
                check_g_realization_product(&a, &b, 10).unwrap();
            }
        }
    }
    for n in 1..=4usize {
        for a in parking_functions(n) {
            check_ordered_sum(&a, 8, 8).unwrap();
            check_ordered_sum(&a, 10, 10).unwrap();
        }
    }
    // matrix model of the F basis
    check_matrix_model(4).unwrap();
    // commutative realization of the MM basis
    for (d1, d2) in coeffs::degree_pairs(4) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for a in ndpf_basis(d1) {
            for b in ndpf_basis(d2) {
                let lhs = cqsym::commutative_product(
                    &cqsym::mm_realize(&a, 8),
                    &cqsym::mm_realize(&b, 8),
                );
                let mut rhs: LinComb<Word> = LinComb::zero();
                for (k, c) in mm_product(&a, &b).iter() {
                    rhs = rhs.add(&cqsym::mm_realize(&k.0, 8).scale(c));
                }
                assert_eq!(lhs, rhs, "MM realization at ({a}, {b})");
            }
        }
    }
}

#[test]
fn criterion_09_series_tables() {
    let order = 12;
    let ints = |s: &parkhopf::series::PowerSeries, lo: usize, hi: usize| -> Vec<i128> {
        s.integer_coeffs(lo, hi)
            .iter()
            .map(|b| b.to_string().parse::<i128>().unwrap())
            .collect()
    };
    let tp = named_series(Named::TotallyPrimitive, order);
    assert_eq!(ints(&tp, 1, 5), [1, 1, 7, 66, 786]);
    let conn = named_series(Named::Connected, order);
    assert_eq!(ints(&conn, 1, 5), [1, 2, 11, 92, 1014]);
    // connected counts match the series
    for n in 1..=5usize {
        assert_eq!(
            parkhopf::words::connected_parking_functions(n).len() as i128,
            ints(&conn, n, n)[0]
        );
    }
    let gens2 = named_series(Named::TrialgebraGenerators, order);
    assert_eq!(ints(&gens2, 1, 5), [1, 0, 5, 50, 634]);
    let prim = named_series(Named::CatalanPrimitive, order);
    assert_eq!(ints(&prim, 1, 5), [1, 1, 3, 8, 25]);
    let s = named_series(Named::LittleSchroder, order);
    let u = named_series(Named::LargeSchroder, order);
    for n in 1..=9usize {
        assert_eq!(u.coeff(n + 1), s.coeff(n) * rat(2), "degree {n}");
    }
    for n in 1..=7usize {
        assert_eq!(rat(narayana_at(n, 2) as i64), s.coeff(n));
    }
    // class counts match the Schröder series
    for n in 1..=5usize {
        assert_eq!(rat(segmented_words(n).len() as i64), s.coeff(n));
    }
}

#[test]
fn criterion_10_lagrange_inversion() {
    check_f_g_system(6).unwrap();
    for n in 1..=6usize {
        check_g_counts_parking(n).unwrap();
    }
    let g3 = lagrange_g(3);
    let mut expect = LinComb::unit(SKey(Composition::new(vec![3])));
    expect.add_term(SKey(Composition::new(vec![2, 1])), rat(2));
    expect.add_term(SKey(Composition::new(vec![1, 2])), rat(1));
    expect.add_term(SKey(Composition::new(vec![1, 1, 1])), rat(1));
    assert_eq!(g3, expect);
    let schroder = [1u128, 3, 11, 45, 197, 903];
    for n in 1..=6usize {
        assert_eq!(sqsym_dim_via_ribbons(n), rat(schroder[n - 1] as i64));
        assert_eq!(schroder_closed_form(n as u64), schroder[n - 1]);
    }
}

#[test]
fn criterion_11_appendix_identity() {
    assert_eq!(prime_count_by_partition(&[3, 2, 2]), 10);
    for n in 2..=6usize {
        for lambda in partitions(n) {
            assert_eq!(
                prime_count_by_partition(&lambda),
                prime_count_by_enumeration(&lambda),
                "λ = {lambda:?}"
            );
        }
    }
}

#[test]
fn criterion_12_bijections() {
    for n in 1..=7usize {
        for a in nondecreasing_parking_functions(n) {
            let p = parkhopf::words::ndpf_to_noncrossing(&a).unwrap();
            assert_eq!(parkhopf::words::noncrossing_to_ndpf(&p), a);
        }
    }
    for n in 2..=5usize {
        for q in segmented_words(n - 1) {
            for branch in [SchroderBranch::Prime, SchroderBranch::Breakpoint] {
                let image = schroder_forward(&q, branch);
                let (back, got) = schroder_backward(&image);
                assert_eq!(back, q);
                assert_eq!(got, branch);
            }
        }
    }
    assert_eq!(
        schroder_forward(&sw("11|2|455|669"), SchroderBranch::Breakpoint),
        sw("11|2|4|555|669")
    );
    for n in 1..=5usize {
        for c in segmented_compositions(n) {
            assert_eq!(psev(&detassmax(&c)), c);
        }
    }
}

#[test]
fn criterion_13_morphisms_units_splitting() {
    // phi on permutation pairs
    for (d1, d2) in coeffs::degree_pairs(4) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for s in permutations(d1) {
            for t in permutations(d2) {
                let sp = ParkingFunction::new(s.clone()).unwrap();
                let tp = ParkingFunction::new(t.clone()).unwrap();
                let lhs: LinComb<GKey> =
                    f_product(&sp, &tp).map_linear(|k| phi_embed(k.0.word()));
                let rhs = LinComb::bilinear(&phi_embed(&s), &phi_embed(&t), |x, y| {
                    g_product(&x.0, &y.0)
                });
                assert_eq!(lhs, rhs);
            }
        }
    }
    // eta on parking pairs
    for (d1, d2) in coeffs::degree_pairs(4) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for a in parking_functions(d1) {
            for b in parking_functions(d2) {
                let lhs = eta(&f_product(&a, &b));
                let rhs = LinComb::bilinear(
                    &eta(&LinComb::unit(FKey(a.clone()))),
                    &eta(&LinComb::unit(FKey(b.clone()))),
                    |x, y| qsym_f_product(&x.0, &y.0),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }
    // eta sends V^I to the characteristic of the type class
    for n in 1..=4usize {
        for c in compositions(n) {
            let img = eta(&v_basis(&c));
            let mut expect: LinComb<FqKey> = LinComb::zero();
            for a in parkhopf::pqsym::parking_functions_of_type(&c) {
                expect.add_term(
                    FqKey(parkhopf::words::descent_composition(a.word())),
                    rat(1),
                );
            }
            assert_eq!(img, expect, "I = {c}");
        }
    }
    // gamma against the quasi-shuffle
    for (d1, d2) in coeffs::degree_pairs(4) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for i in compositions(d1) {
            for j in compositions(d2) {
                let mut lhs: LinComb<MmKey> = LinComb::zero();
                for c in parkhopf::words::quasi_shuffle(&i, &j) {
                    lhs = lhs.add(&gamma_embed(&c));
                }
                let rhs = LinComb::bilinear(&gamma_embed(&i), &gamma_embed(&j), |x, y| {
                    mm_product(&x.0, &y.0)
                });
                assert_eq!(lhs, rhs);
            }
        }
    }
    // ch is multiplicative
    for (d1, d2) in coeffs::degree_pairs(4) {
        if d1 == 0 || d2 == 0 {
            continue;
        }
        for a in ndpf_basis(d1) {
            for b in ndpf_basis(d2) {
                assert_eq!(
                    ch_map(&pcat_product(&a, &b).0),
                    s_product(&ch_map(&a).0, &ch_map(&b).0)
                );
            }
        }
    }
    // J_n: left unit, not a right unit
    for n in 1..=4usize {
        let j = jn(n);
        let mut witness = None;
        for a in ndpf_basis(n) {
            assert_eq!(internal_pcat(&j, &a), LinComb::unit(PcatKey(a.clone())));
            if internal_pcat(&a, &j) != LinComb::unit(PcatKey(a.clone())) {
                witness = Some(a);
            }
        }
        if n >= 3 {
            assert!(witness.is_some(), "right-unit failure witness at n = {n}");
        }
    }
    // splitting formula on sampled tuples at n = 3 and 4
    let mut rng = Rng(2024);
    for n in [3usize, 4] {
        let basis = ndpf_basis(n);
        let mut done = 0;
        while done < 50 {
            let g = rng.pick(&basis).clone();
            if rng.next().is_multiple_of(2) {
                let d1 = 1 + (rng.next() % (n as u64 - 1)) as usize;
                let f1 = rng.pick(&ndpf_basis(d1)).clone();
                let f2 = rng.pick(&ndpf_basis(n - d1)).clone();
                check_splitting(&f1, &f2, &g).unwrap();
            } else if n >= 3 {
                let d1 = 1 + (rng.next() % (n as u64 - 2)) as usize;
                let d2 = 1 + (rng.next() % (n as u64 - d1 as u64 - 1)) as usize;
                let f1 = rng.pick(&ndpf_basis(d1)).clone();
                let f2 = rng.pick(&ndpf_basis(d2)).clone();
                let f3 = rng.pick(&ndpf_basis(n - d1 - d2)).clone();
                check_splitting3(&f1, &f2, &f3, &g).unwrap();
            }
            done += 1;
        }
    }
    // RCat_a * J_n projects onto the ribbon of the evaluation word
    for n in 1..=4usize {
        let j = jn(n);
        for a in ndpf_basis(n) {
            let lhs = internal_pcat_elem(&rcat_expand(&a), &LinComb::unit(PcatKey(j.clone())));
            let mut word = Ndpf::empty();
            for &p in a.pf().pack_evaluation().parts() {
                word = pcat_product(&word, &jn(p as usize)).0;
            }
            assert_eq!(lhs, rcat_expand(&word));
        }
    }
}

#[test]
fn criterion_14_structure_witnesses() {
    // QS_1 (QS_11 + QS_12) = (QS_11 + QS_12) QS_1
    let one = LinComb::unit(QsKey(sw("1")));
    let sum = LinComb::from_keys([QsKey(sw("11")), QsKey(sw("12"))]);
    let lhs = LinComb::bilinear(&one, &sum, |a, b| qs_product(&a.0, &b.0));
    let rhs = LinComb::bilinear(&sum, &one, |a, b| qs_product(&a.0, &b.0));
    assert_eq!(lhs, rhs);
    assert!(!lhs.is_zero());
    // QSC_1 (QSC_2 + QSC_11) = (QSC_2 + QSC_11) QSC_1
    let one = LinComb::unit(QscKey(sc("1")));
    let sum = LinComb::from_keys([QscKey(sc("2")), QscKey(sc("11"))]);
    let lhs = LinComb::bilinear(&one, &sum, |a, b| qsc_product(&a.0, &b.0));
    let rhs = LinComb::bilinear(&sum, &one, |a, b| qsc_product(&a.0, &b.0));
    assert_eq!(lhs, rhs);
    assert!(!lhs.is_zero());
    // the quasi-symmetric primitive commutes with QSC_1 (word indices
    // 12, 1|2, 11 translated through the packed-evaluation bijection)
    let x = {
        let mut e = LinComb::unit(QscKey(sc("11")));
        e.add_term(QscKey(sc("1|1")), rat(-1));
        e.add_term(QscKey(sc("2")), rat(1));
        e
    };
    let xy = LinComb::bilinear(&one, &x, |a, b| qsc_product(&a.0, &b.0));
    let yx = LinComb::bilinear(&x, &one, |a, b| qsc_product(&a.0, &b.0));
    assert_eq!(xy, yx);
    assert!(!xy.is_zero());
}

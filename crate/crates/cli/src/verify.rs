//! Named verification suites behind `parkhopf verify`.

use std::time::Instant;

use parkhopf::coeffs::{
    self, check_all_axioms, check_duality_adjunction, primitive_dim, rat, LinComb,
};
use parkhopf::cqsym::{
    self, check_splitting, contributing_matrices, internal_pcat, internal_pcat_elem, jn,
    ndpf_basis, pcat_product, prime_count_by_enumeration, prime_count_by_partition, rcat_expand,
    CqsymMm, CqsymPcat, Ndpf, PcatKey,
};
use parkhopf::ncsf::{check_f_g_system, check_g_counts_parking, schroder_closed_form,
    sqsym_dim_via_ribbons};
use parkhopf::pqsym::{
    check_bidendriform_g, check_codendriform_g, check_dendriform_g, check_trid_partition,
    check_tridendriform_g, internal_f, PqsymF, PqsymG,
};
use parkhopf::realize::{check_g_realization_product, check_matrix_model, check_ordered_sum,
    check_word_tridendriform};
use parkhopf::scqsym::{
    detassmax, psc_product, psev, rsc_expand, rsc_product, segmented_compositions, ScqsymPsc,
    ScqsymQsc,
};
use parkhopf::series::{named_series, narayana_at, Named};
use parkhopf::sqsym::{
    ps_in_rs, ps_product, rs_expand, rs_product, schroder_backward, schroder_forward,
    segmented_words, SchroderBranch, SqsymPs, SqsymQs,
};
use parkhopf::words::{
    catalan, nondecreasing_parking_functions, parking_count, parking_functions, partitions,
    prime_parking_functions,
};

pub struct CheckResult {
    pub name: String,
    pub degree: usize,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

type Check = (String, usize, Box<dyn FnOnce() -> Result<String, String>>);

fn check(
    name: impl Into<String>,
    degree: usize,
    run: impl FnOnce() -> Result<String, String> + 'static,
) -> Check {
    (name.into(), degree, Box::new(run))
}

fn plain(run: impl FnOnce() -> Result<(), String> + 'static) -> impl FnOnce() -> Result<String, String> {
    move || run().map(|()| String::new())
}

pub const SUITES: &[&str] = &[
    "hopf",
    "bidendriform",
    "tridendriform",
    "duality",
    "internal",
    "ribbons",
    "realization",
    "series",
    "counts",
    "all",
];

pub fn build_suite(suite: &str, degree: usize, seed: u64) -> Option<Vec<Check>> {
    let mut checks = Vec::new();
    match suite {
        "hopf" => hopf(&mut checks, degree),
        "bidendriform" => bidendriform(&mut checks, degree),
        "tridendriform" => tridendriform(&mut checks, degree),
        "duality" => duality(&mut checks, degree),
        "internal" => internal(&mut checks, degree, seed),
        "ribbons" => ribbons(&mut checks, degree),
        "realization" => realization(&mut checks, degree),
        "series" => series(&mut checks, degree),
        "counts" => counts(&mut checks, degree),
        "all" => {
            hopf(&mut checks, degree);
            bidendriform(&mut checks, degree);
            tridendriform(&mut checks, degree);
            duality(&mut checks, degree);
            internal(&mut checks, degree, seed);
            ribbons(&mut checks, degree);
            realization(&mut checks, degree);
            series(&mut checks, degree);
            counts(&mut checks, degree);
        }
        _ => return None,
    }
    Some(checks)
}

pub fn run_suite(checks: Vec<Check>) -> Vec<CheckResult> {
    checks
        .into_iter()
        .map(|(name, degree, run)| {
            let start = Instant::now();
            let outcome = run();
            let elapsed_ms = start.elapsed().as_millis();
            match outcome {
                Ok(detail) => CheckResult {
                    name,
                    degree,
                    pass: true,
                    detail,
                    elapsed_ms,
                },
                Err(detail) => CheckResult {
                    name,
                    degree,
                    pass: false,
                    detail,
                    elapsed_ms,
                },
            }
        })
        .collect()
}

fn hopf(checks: &mut Vec<Check>, degree: usize) {
    let d = degree.min(4);
    checks.push(check("hopf/PQSym(F)", d, plain(move || check_all_axioms(&PqsymF, d))));
    checks.push(check("hopf/PQSym*(G)", d, plain(move || check_all_axioms(&PqsymG, d))));
    checks.push(check("hopf/SQSym(PS)", d, plain(move || check_all_axioms(&SqsymPs, d))));
    checks.push(check("hopf/SQSym*(QS)", d, plain(move || check_all_axioms(&SqsymQs, d))));
    checks.push(check("hopf/CQSym(PCat)", d, plain(move || check_all_axioms(&CqsymPcat, d))));
    checks.push(check("hopf/CQSym*(MM)", d, plain(move || check_all_axioms(&CqsymMm, d))));
    checks.push(check("hopf/SCQSym(PSC)", d, plain(move || check_all_axioms(&ScqsymPsc, d))));
    checks.push(check("hopf/SCQSym*(QSC)", d, plain(move || check_all_axioms(&ScqsymQsc, d))));
}

fn bidendriform(checks: &mut Vec<Check>, degree: usize) {
    let d = degree.min(4);
    checks.push(check("bidend/dendriform", d, plain(move || check_dendriform_g(d))));
    checks.push(check("bidend/codendriform", d, plain(move || check_codendriform_g(d))));
    checks.push(check("bidend/compatibility", d, plain(move || check_bidendriform_g(d))));
}

fn tridendriform(checks: &mut Vec<Check>, degree: usize) {
    let d = degree.min(4);
    checks.push(check("trid/words", 6, plain(|| check_word_tridendriform(6, 4))));
    checks.push(check("trid/G-splitting", d, plain(move || check_tridendriform_g(d))));
    checks.push(check(
        "trid/partition-of-product",
        (d + 1).min(5),
        plain(move || check_trid_partition((d + 1).min(5))),
    ));
}

fn duality(checks: &mut Vec<Check>, degree: usize) {
    let d = degree.min(4);
    checks.push(check("duality/PQSym", d, plain(move || {
        check_duality_adjunction(&PqsymF, &PqsymG, d)?;
        check_duality_adjunction(&PqsymG, &PqsymF, d)
    })));
    checks.push(check("duality/SQSym", d, plain(move || {
        check_duality_adjunction(&SqsymPs, &SqsymQs, d)?;
        check_duality_adjunction(&SqsymQs, &SqsymPs, d)
    })));
    checks.push(check("duality/CQSym", d, plain(move || {
        check_duality_adjunction(&CqsymPcat, &CqsymMm, d)?;
        check_duality_adjunction(&CqsymMm, &CqsymPcat, d)
    })));
    checks.push(check("duality/SCQSym", d, plain(move || {
        check_duality_adjunction(&ScqsymPsc, &ScqsymQsc, d)?;
        check_duality_adjunction(&ScqsymQsc, &ScqsymPsc, d)
    })));
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

fn internal(checks: &mut Vec<Check>, degree: usize, seed: u64) {
    checks.push(check("internal/F-values", 8, plain(|| {
        let pf = |s: &str| s.parse::<parkhopf::words::ParkingFunction>().unwrap();
        if internal_f(&pf("211"), &pf("211")) != pf("311") {
            return Err("F_211 * F_211 differs".into());
        }
        if internal_f(&pf("31143231"), &pf("23571713")) != pf("61385451") {
            return Err("the degree-8 product differs".into());
        }
        Ok(())
    })));
    checks.push(check("internal/PCat-values", 4, plain(|| {
        let nd = |s: &str| s.parse::<Ndpf>().unwrap();
        let prod = internal_pcat(&nd("1123"), &nd("1224"));
        let mut expect = LinComb::zero();
        expect.add_term(PcatKey(nd("1134")), rat(2));
        expect.add_term(PcatKey(nd("1234")), rat(5));
        if prod != expect {
            return Err("PCat^1123 * PCat^1224 differs".into());
        }
        if contributing_matrices(&nd("1123"), &nd("1224")).len() != 7 {
            return Err("expected 7 contributing matrices".into());
        }
        Ok(())
    })));
    checks.push(check("internal/associativity", 3, plain(|| {
        let all = parking_functions(3);
        for a in &all {
            for b in &all {
                let ab = internal_f(a, b);
                for c in &all {
                    if internal_f(&ab, c) != internal_f(a, &internal_f(b, c)) {
                        return Err(format!("F associativity fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let basis = ndpf_basis(3);
        for a in &basis {
            for b in &basis {
                let ab = internal_pcat(a, b);
                for c in &basis {
                    let lhs = internal_pcat_elem(&ab, &LinComb::unit(PcatKey(c.clone())));
                    let rhs = internal_pcat_elem(
                        &LinComb::unit(PcatKey(a.clone())),
                        &internal_pcat(b, c),
                    );
                    if lhs != rhs {
                        return Err(format!("PCat associativity fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    })));
    let d = degree.min(4);
    checks.push(check("internal/left-unit", d, plain(move || {
        for n in 1..=d {
            let j = jn(n);
            for a in ndpf_basis(n) {
                if internal_pcat(&j, &a) != LinComb::unit(PcatKey(a.clone())) {
                    return Err(format!("J_{n} fails as a left unit on {a}"));
                }
            }
        }
        Ok(())
    })));
    checks.push(check("internal/splitting-sampled", 4, plain(move || {
        let mut rng = Rng(seed);
        for n in [3usize, 4] {
            let basis = ndpf_basis(n);
            for _ in 0..25 {
                let g = basis[(rng.next() % basis.len() as u64) as usize].clone();
                let d1 = 1 + (rng.next() % (n as u64 - 1)) as usize;
                let left = ndpf_basis(d1);
                let right = ndpf_basis(n - d1);
                let f1 = left[(rng.next() % left.len() as u64) as usize].clone();
                let f2 = right[(rng.next() % right.len() as u64) as usize].clone();
                check_splitting(&f1, &f2, &g)?;
            }
        }
        Ok(())
    })));
    checks.push(check("internal/rcat-projection", d, plain(move || {
        for n in 1..=d {
            let j = jn(n);
            for a in ndpf_basis(n) {
                let lhs =
                    internal_pcat_elem(&rcat_expand(&a), &LinComb::unit(PcatKey(j.clone())));
                let mut word = Ndpf::empty();
                for &p in a.pf().pack_evaluation().parts() {
                    word = pcat_product(&word, &jn(p as usize)).0;
                }
                if lhs != rcat_expand(&word) {
                    return Err(format!("RCat projection differs on {a}"));
                }
            }
        }
        Ok(())
    })));
}

fn ribbons(checks: &mut Vec<Check>, degree: usize) {
    let d = degree.min(5);
    checks.push(check("ribbons/RS-inversion", d, plain(move || {
        for n in 1..=d {
            for q in segmented_words(n) {
                let back = rs_expand(&q).map_linear(|k| ps_in_rs(&k.0));
                if back != LinComb::unit(parkhopf::sqsym::RsKey(q.clone())) {
                    return Err(format!("RS inversion fails on {q}"));
                }
            }
        }
        Ok(())
    })));
    checks.push(check("ribbons/RCat-inversion", d, plain(move || {
        for n in 1..=d {
            for a in ndpf_basis(n) {
                let back = rcat_expand(&a).map_linear(|k| cqsym::pcat_in_rcat(&k.0));
                if back != LinComb::unit(parkhopf::cqsym::RcatKey(a.clone())) {
                    return Err(format!("RCat inversion fails on {a}"));
                }
            }
        }
        Ok(())
    })));
    let d4 = degree.min(4);
    checks.push(check("ribbons/product-consistency", d4, plain(move || {
        for (d1, d2) in coeffs::degree_pairs(d4) {
            if d1 == 0 || d2 == 0 {
                continue;
            }
            for a in segmented_words(d1) {
                for b in segmented_words(d2) {
                    let via_ps = LinComb::bilinear(&rs_expand(&a), &rs_expand(&b), |x, y| {
                        ps_product(&x.0, &y.0)
                    });
                    let direct = rs_product(&a, &b).map_linear(|k| rs_expand(&k.0));
                    if via_ps != direct {
                        return Err(format!("RS product differs on ({a}, {b})"));
                    }
                }
            }
            for a in segmented_compositions(d1) {
                for b in segmented_compositions(d2) {
                    let via_psc = LinComb::bilinear(&rsc_expand(&a), &rsc_expand(&b), |x, y| {
                        psc_product(&x.0, &y.0)
                    });
                    let direct = rsc_product(&a, &b).map_linear(|k| rsc_expand(&k.0));
                    if via_psc != direct {
                        return Err(format!("RSC product differs on ({a}, {b})"));
                    }
                    if rsc_product(&a, &b).len() != 3 {
                        return Err(format!("RSC product is not three terms on ({a}, {b})"));
                    }
                }
            }
        }
        Ok(())
    })));
    checks.push(check("ribbons/schroder-bijection", d, plain(move || {
        for n in 2..=d {
            for q in segmented_words(n - 1) {
                for branch in [SchroderBranch::Prime, SchroderBranch::Breakpoint] {
                    let image = schroder_forward(&q, branch);
                    let (back, got) = schroder_backward(&image);
                    if back != q || got != branch {
                        return Err(format!("bijection round trip fails on {q}"));
                    }
                }
            }
        }
        Ok(())
    })));
}

fn realization(checks: &mut Vec<Check>, degree: usize) {
    let d = degree.min(4);
    checks.push(check("realize/G-words", d, plain(move || {
        for (d1, d2) in coeffs::degree_pairs(d) {
            if d1 == 0 || d2 == 0 {
                continue;
            }
            for a in parking_functions(d1) {
                for b in parking_functions(d2) {
                    check_g_realization_product(&a, &b, 8)?;
                }
            }
        }
        for n in 1..=d.min(3) {
            for a in parking_functions(n) {
                check_ordered_sum(&a, 8, 8)?;
            }
        }
        Ok(())
    })));
    checks.push(check("realize/F-matrices", d, plain(move || check_matrix_model(d))));
    checks.push(check("realize/MM-polynomials", d, plain(move || {
        for (d1, d2) in coeffs::degree_pairs(d) {
            if d1 == 0 || d2 == 0 {
                continue;
            }
            for a in ndpf_basis(d1) {
                for b in ndpf_basis(d2) {
                    let lhs = cqsym::commutative_product(
                        &cqsym::mm_realize(&a, 8),
                        &cqsym::mm_realize(&b, 8),
                    );
                    let mut rhs = LinComb::zero();
                    for (k, c) in cqsym::mm_product(&a, &b).iter() {
                        rhs = rhs.add(&cqsym::mm_realize(&k.0, 8).scale(c));
                    }
                    if lhs != rhs {
                        return Err(format!("MM realization differs on ({a}, {b})"));
                    }
                }
            }
        }
        Ok(())
    })));
}

fn series(checks: &mut Vec<Check>, degree: usize) {
    let order = degree.max(8) + 1;
    checks.push(check("series/tables", order, plain(move || {
        let expect: &[(Named, &[i128])] = &[
            (Named::TotallyPrimitive, &[1, 1, 7, 66, 786, 11278, 189391]),
            (Named::Connected, &[1, 2, 11, 92, 1014, 13795]),
            (Named::TrialgebraGenerators, &[1, 0, 5, 50, 634, 9475]),
            (Named::LieGenerators, &[1, 2, 9, 80, 901, 12564]),
            (Named::CatalanPrimitive, &[1, 1, 3, 8, 25, 75, 245, 800]),
            (Named::LittleSchroder, &[1, 3, 11, 45, 197]),
            (Named::Catalan, &[1, 2, 5, 14, 42]),
        ];
        for (name, coeffs) in expect {
            let s = named_series(*name, 12);
            for (i, &c) in coeffs.iter().enumerate() {
                let got = s.coeff(i + 1);
                if got != parkhopf::coeffs::Rational::from_integer(c.into()) {
                    return Err(format!("{name:?} coefficient {} is {got}, wanted {c}", i + 1));
                }
            }
        }
        Ok(())
    })));
    checks.push(check("series/enumeration-crosschecks", 5, plain(|| {
        let conn = named_series(Named::Connected, 8);
        for n in 1..=5usize {
            let count = parkhopf::words::connected_parking_functions(n).len() as i64;
            if conn.coeff(n) != rat(count) {
                return Err(format!("connected count differs at degree {n}"));
            }
        }
        let s = named_series(Named::LittleSchroder, 12);
        for n in 1..=5usize {
            if s.coeff(n) != rat(segmented_words(n).len() as i64) {
                return Err(format!("class count differs at degree {n}"));
            }
        }
        for n in 1..=7usize {
            if rat(narayana_at(n, 2) as i64) != s.coeff(n) {
                return Err(format!("Narayana evaluation differs at degree {n}"));
            }
        }
        let u = named_series(Named::LargeSchroder, 12);
        for n in 1..=9usize {
            if u.coeff(n + 1) != s.coeff(n).clone() * rat(2) {
                return Err(format!("large Schröder offset differs at degree {n}"));
            }
        }
        Ok(())
    })));
    checks.push(check("series/lagrange", 6, plain(|| {
        check_f_g_system(8)?;
        for n in 1..=6 {
            check_g_counts_parking(n)?;
        }
        let schroder = [1u128, 3, 11, 45, 197, 903];
        for n in 1..=6usize {
            if sqsym_dim_via_ribbons(n) != rat(schroder[n - 1] as i64) {
                return Err(format!("ribbon character differs at degree {n}"));
            }
            if schroder_closed_form(n as u64) != schroder[n - 1] {
                return Err(format!("closed form differs at degree {n}"));
            }
        }
        Ok(())
    })));
    checks.push(check("series/appendix", 6, plain(|| {
        if prime_count_by_partition(&[3, 2, 2]) != 10 {
            return Err("(3,2,2) prime count differs".into());
        }
        for n in 2..=6usize {
            for lambda in partitions(n) {
                if prime_count_by_partition(&lambda) != prime_count_by_enumeration(&lambda) {
                    return Err(format!("prime count differs on {lambda:?}"));
                }
            }
        }
        Ok(())
    })));
}

fn counts(checks: &mut Vec<Check>, degree: usize) {
    let d = degree.min(6);
    checks.push(check("counts/dimensions", d, move || {
        let mut lines = Vec::new();
        for n in 1..=d {
            let pf = parking_functions(n).len();
            if pf as u128 != parking_count(n as u64) {
                return Err(format!("parking count differs at degree {n}"));
            }
            let nd = nondecreasing_parking_functions(n).len();
            if nd as u128 != catalan(n as u64) {
                return Err(format!("Catalan count differs at degree {n}"));
            }
            let classes = segmented_words(n).len();
            let segcomp = segmented_compositions(n).len();
            if segcomp != 3usize.pow(n as u32 - 1) {
                return Err(format!("segmented composition count differs at degree {n}"));
            }
            let primes = prime_parking_functions(n).len();
            lines.push(format!(
                "n={n}: PF={pf} PPF={primes} NDPF={nd} classes={classes} segcomp={segcomp}"
            ));
        }
        Ok(lines.join("; "))
    }));
    checks.push(check("counts/type-histogram", 4, plain(|| {
        let mut hist: std::collections::BTreeMap<Vec<u32>, usize> = Default::default();
        for a in parking_functions(4) {
            *hist
                .entry(a.type_composition().parts().to_vec())
                .or_default() += 1;
        }
        let expect: &[(&[u32], usize)] = &[
            (&[4], 27),
            (&[3, 1], 16),
            (&[1, 3], 16),
            (&[2, 2], 6),
            (&[2, 1, 1], 12),
            (&[1, 2, 1], 12),
            (&[1, 1, 2], 12),
            (&[1, 1, 1, 1], 24),
        ];
        for (parts, count) in expect {
            if hist.get(*parts).copied().unwrap_or(0) != *count {
                return Err(format!("type {parts:?} count differs"));
            }
        }
        Ok(())
    })));
    checks.push(check("counts/primitive-dims", 4, plain(|| {
        if primitive_dim(&SqsymQs, 3) != 6 {
            return Err("SQSym* degree-3 primitive dimension differs".into());
        }
        if primitive_dim(&SqsymPs, 3) != 7 {
            return Err("SQSym degree-3 primitive dimension differs".into());
        }
        let dims: Vec<usize> = (1..=4).map(|n| primitive_dim(&CqsymPcat, n)).collect();
        if dims != [1, 1, 3, 8] {
            return Err(format!("CQSym primitive dimensions are {dims:?}"));
        }
        Ok(())
    })));
    checks.push(check("counts/bijections", d.min(5), move || {
        let cap = d.min(5);
        for n in 1..=cap {
            for a in nondecreasing_parking_functions(n) {
                let p = parkhopf::words::ndpf_to_noncrossing(&a)
                    .map_err(|e| format!("bijection error: {e}"))?;
                if parkhopf::words::noncrossing_to_ndpf(&p) != a {
                    return Err(format!("noncrossing round trip fails on {a}"));
                }
            }
            for c in segmented_compositions(n) {
                if psev(&detassmax(&c)) != c {
                    return Err(format!("psev/detassmax round trip fails on {c}"));
                }
            }
        }
        Ok(format!("round trips checked through degree {cap}"))
    }));
}

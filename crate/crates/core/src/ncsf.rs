//! A minimal engine for noncommutative symmetric functions on the complete
//! (`S`) and ribbon (`R`) bases, enough to run the noncommutative Lagrange
//! inversion and the character computations coming from the Catalan algebra.

use crate::basis_key;
use crate::coeffs::{rat, LinComb, Rational};
use crate::words::{binomial, compositions, nondecreasing_parking_functions, Composition};

basis_key!(
    /// Complete basis `S^I`, multiplicative by concatenation.
    SKey,
    Composition,
    "S",
    |c| c.weight() as usize,
    |c| (c.parts().to_vec(), Vec::new())
);

basis_key!(
    /// Ribbon basis `R_I`.
    RKey,
    Composition,
    "R",
    |c| c.weight() as usize,
    |c| (c.parts().to_vec(), Vec::new())
);

basis_key!(
    /// Monomial basis of quasi-symmetric functions; multiplies by the
    /// quasi-shuffle.
    MqKey,
    Composition,
    "M",
    |c| c.weight() as usize,
    |c| (c.parts().to_vec(), Vec::new())
);

/// Quasi-shuffle product of monomial quasi-symmetric functions.
pub fn m_qsym_product(a: &Composition, b: &Composition) -> LinComb<MqKey> {
    LinComb::from_keys(crate::words::quasi_shuffle(a, b).into_iter().map(MqKey))
}

/// Ribbon products through the complete basis.
pub fn r_product(x: &LinComb<RKey>, y: &LinComb<RKey>) -> LinComb<RKey> {
    let prod = LinComb::bilinear(&r_to_s(x), &r_to_s(y), |a, b| {
        LinComb::unit(s_product(&a.0, &b.0))
    });
    s_to_r(&prod)
}

/// `S^I S^J = S^(I·J)`.
pub fn s_product(a: &Composition, b: &Composition) -> SKey {
    SKey(a.concat(b))
}

/// `S^I = Σ R_J` over the compositions `J` coarser than (or equal to) `I`.
pub fn s_to_r(x: &LinComb<SKey>) -> LinComb<RKey> {
    x.map_linear(|k| {
        LinComb::from_keys(k.0.coarsenings().into_iter().map(|(c, _)| RKey(c)))
    })
}

/// `R_I = Σ (-1)^(len I - len J) S^J` over coarser `J`.
pub fn r_to_s(x: &LinComb<RKey>) -> LinComb<SKey> {
    x.map_linear(|k| {
        let mut out = LinComb::zero();
        for (c, merged) in k.0.coarsenings() {
            let sign = if merged % 2 == 0 { 1 } else { -1 };
            out.add_term(SKey(c), rat(sign));
        }
        out
    })
}

/// The linear operator incrementing the first part in the `S` basis; on the
/// empty composition it produces `S^(1)`.
pub fn omega(x: &LinComb<SKey>) -> LinComb<SKey> {
    x.map_keys(|k| {
        let mut parts = k.0.parts().to_vec();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        SKey(Composition::new(parts))
    })
}

/// Homogeneous components `g_0 .. g_n` of the unique solution of
/// `g = Σ_k S_k g^k`, computed by degree recursion.
pub fn lagrange_g_components(n: usize) -> Vec<LinComb<SKey>> {
    let unit = LinComb::unit(SKey(Composition::empty()));
    let mut g: Vec<LinComb<SKey>> = vec![unit.clone()];
    for m in 1..=n {
        // powers of g by degree, using only components of degree < m
        let mut prev: Vec<LinComb<SKey>> = (0..m)
            .map(|d| if d == 0 { unit.clone() } else { LinComb::zero() })
            .collect();
        let mut gm = LinComb::zero();
        for k in 1..=m {
            let level: Vec<LinComb<SKey>> = (0..m)
                .map(|d| {
                    let mut acc = LinComb::zero();
                    for j in 0..=d {
                        let part = LinComb::bilinear(&prev[d - j], &g[j], |x, y| {
                            LinComb::unit(s_product(&x.0, &y.0))
                        });
                        acc = acc.add(&part);
                    }
                    acc
                })
                .collect();
            let sk = LinComb::unit(SKey(Composition::new(vec![k as u32])));
            let part = LinComb::bilinear(&sk, &level[m - k], |x, y| {
                LinComb::unit(s_product(&x.0, &y.0))
            });
            gm = gm.add(&part);
            prev = level;
        }
        g.push(gm);
    }
    g
}

/// Degree-`n` component of `g`.
pub fn lagrange_g(n: usize) -> LinComb<SKey> {
    lagrange_g_components(n).pop().unwrap()
}

/// `f_n = Ω g_(n-1)`, the prime components.
pub fn f_component(n: usize) -> LinComb<SKey> {
    assert!(n >= 1);
    omega(&lagrange_g(n - 1))
}

/// Verify `g = (1 - f)^{-1}` degree by degree: `g_m = Σ_k f_k g_(m-k)`.
pub fn check_f_g_system(n: usize) -> Result<(), String> {
    let g = lagrange_g_components(n);
    let f: Vec<LinComb<SKey>> = (1..=n).map(|m| omega(&g[m - 1])).collect();
    for m in 1..=n {
        let mut acc = LinComb::zero();
        for k in 1..=m {
            let part = LinComb::bilinear(&f[k - 1], &g[m - k], |x, y| {
                LinComb::unit(s_product(&x.0, &y.0))
            });
            acc = acc.add(&part);
        }
        if acc != g[m] {
            return Err(format!("g_{m} differs from (f g)_{m}"));
        }
    }
    Ok(())
}

/// Coefficient table of `g_n` indexed by the packed evaluations of
/// nondecreasing parking functions: the two must agree.
pub fn check_g_counts_parking(n: usize) -> Result<(), String> {
    let g = lagrange_g(n);
    let mut counts: std::collections::BTreeMap<Composition, i64> = Default::default();
    for a in nondecreasing_parking_functions(n) {
        *counts.entry(a.pack_evaluation()).or_default() += 1;
    }
    for c in compositions(n) {
        let expect = rat(counts.get(&c).copied().unwrap_or(0));
        let got = g.coeff(&SKey(c.clone()));
        if got != expect {
            return Err(format!(
                "coefficient of S^{c} in g_{n} is {got} but the enumeration gives {expect}"
            ));
        }
    }
    Ok(())
}

/// Hypoplactic class count by character calculus: write `g_n` in the ribbon
/// basis and sum the coefficients.
pub fn sqsym_dim_via_ribbons(n: usize) -> Rational {
    let r = s_to_r(&lagrange_g(n));
    let mut acc = Rational::from_integer(0.into());
    for (_, c) in r.iter() {
        acc += c;
    }
    acc
}

/// Closed binomial form `(1/(2n+2)) Σ_k C(n+1,k) C(2n-k, n-k)` for the same
/// count.
pub fn schroder_closed_form(n: u64) -> u128 {
    let total: u128 = (0..=n)
        .map(|k| binomial(n + 1, k) * binomial(2 * n - k, n - k))
        .sum();
    assert_eq!(total % (2 * n as u128 + 2), 0);
    total / (2 * n as u128 + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::permutations;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn s_sum(terms: &[(&[u32], i64)]) -> LinComb<SKey> {
        let mut out = LinComb::zero();
        for (parts, coeff) in terms {
            out.add_term(SKey(c(parts)), rat(*coeff));
        }
        out
    }

    #[test]
    fn ribbon_conversion_examples() {
        let s11 = s_to_r(&LinComb::unit(SKey(c(&[1, 1]))));
        let mut expect = LinComb::zero();
        expect.add_term(RKey(c(&[1, 1])), rat(1));
        expect.add_term(RKey(c(&[2])), rat(1));
        assert_eq!(s11, expect);
        assert_eq!(
            s_to_r(&LinComb::unit(SKey(c(&[4])))),
            LinComb::unit(RKey(c(&[4])))
        );
        // conversions are mutually inverse
        for n in 1..=6usize {
            for comp in compositions(n) {
                let s = LinComb::unit(SKey(comp.clone()));
                assert_eq!(r_to_s(&s_to_r(&s)), s);
                let r = LinComb::unit(RKey(comp));
                assert_eq!(s_to_r(&r_to_s(&r)), r);
            }
        }
    }

    #[test]
    fn coarsening_sets_counted_by_permutations() {
        // Σ over J coarser than I of #{σ : C(σ) = J} is the multinomial of
        // I, the number of words sorted into the S^I fiber
        for n in 1..=5usize {
            let mut by_comp: std::collections::BTreeMap<Composition, u128> = Default::default();
            for p in permutations(n) {
                *by_comp
                    .entry(crate::words::descent_composition(&p))
                    .or_default() += 1;
            }
            for i in compositions(n) {
                let total: u128 = i
                    .coarsenings()
                    .into_iter()
                    .map(|(j, _)| by_comp.get(&j).copied().unwrap_or(0))
                    .sum();
                let mut multinomial: u128 = 1;
                let mut rest = n as u64;
                for &p in i.parts() {
                    multinomial *= binomial(rest, p as u64);
                    rest -= p as u64;
                }
                assert_eq!(total, multinomial, "I = {i}");
            }
        }
    }

    #[test]
    fn lagrange_small_values() {
        assert_eq!(lagrange_g(1), s_sum(&[(&[1], 1)]));
        assert_eq!(f_component(1), s_sum(&[(&[1], 1)]));
        assert_eq!(lagrange_g(2), s_sum(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(f_component(3), s_sum(&[(&[3], 1), (&[2, 1], 1)]));
        assert_eq!(
            lagrange_g(3),
            s_sum(&[(&[3], 1), (&[2, 1], 2), (&[1, 2], 1), (&[1, 1, 1], 1)])
        );
    }

    #[test]
    fn lagrange_system_and_counts() {
        check_f_g_system(8).unwrap();
        for n in 1..=6 {
            check_g_counts_parking(n).unwrap();
        }
        // 2^(n-1) monomials with positive coefficients summing to Catalan
        for n in 1..=6usize {
            let g = lagrange_g(n);
            assert_eq!(g.len(), 1 << (n - 1));
            let total: Rational = g.iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(total, rat(crate::words::catalan(n as u64) as i64));
        }
    }

    #[test]
    fn schroder_dims_by_character() {
        assert_eq!(sqsym_dim_via_ribbons(1), rat(1));
        assert_eq!(sqsym_dim_via_ribbons(3), rat(11));
        assert_eq!(sqsym_dim_via_ribbons(4), rat(45));
        assert_eq!(sqsym_dim_via_ribbons(5), rat(197));
        for n in 1..=6u64 {
            assert_eq!(
                sqsym_dim_via_ribbons(n as usize),
                rat(schroder_closed_form(n) as i64)
            );
        }
    }
}

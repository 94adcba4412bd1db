//! Exact symbolic verification of the one-parameter subgroups attached to
//! roots: group law, commutation relations, torus conjugation, and the
//! first-order tangent identity.
//!
//! A root `alpha_r` of ray `i` acts on the function field by
//! `x^alpha -> x^alpha * (1 + t * x^alpha_r)^{v_i(alpha)}`, with one formal
//! parameter per root. All identities are verified with unevaluated
//! parameters, so a check on a single monomial is a genuine polynomial
//! identity, and monomials are sampled from a lattice box.

mod poly;

pub use poly::{LaurentRational, Poly, VarSpec};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::fan::ValidatedFan;
use crate::roots::Root;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("vector {alpha:?} does not satisfy the root signature for ray {ray}")]
    NotARoot { ray: usize, alpha: Vec<BigInt> },
    #[error("{law} fails on monomial {monomial:?} (ray {ray})")]
    LawViolation {
        law: String,
        ray: usize,
        monomial: Vec<BigInt>,
    },
    #[error("neither commutation hypothesis applies to this root pair")]
    CaseNotApplicable,
}

/// Which commutation statement applied to a pair of roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutationCase {
    /// Both cross-values vanish: the subgroups commute.
    Commuting,
    /// One cross-value vanishes: conjugation lands in a one-parameter family
    /// over shifted roots with binomial coefficients.
    Conjugation,
}

fn is_root_for(fan: &ValidatedFan, ray: usize, alpha: &[BigInt]) -> bool {
    fan.value_vector(alpha).iter().enumerate().all(|(j, v)| {
        if j == ray {
            *v == BigInt::from(-1)
        } else {
            !v.is_negative()
        }
    })
}

/// A map `x^beta -> x^beta * B^{v_ray(beta)}` with
/// `B = 1 + sum_j coeffs_j * x^{roots_j}`. The coefficients are arbitrary
/// polynomials in the formal parameters, which covers composed and
/// conjugated families as well as the plain one-parameter case.
#[derive(Clone, Debug)]
pub struct OneParamMap {
    ray: usize,
    roots: Vec<Vec<BigInt>>,
    coeffs: Vec<Poly>,
    vars: VarSpec,
}

impl OneParamMap {
    pub fn new(
        fan: &ValidatedFan,
        ray: usize,
        roots: Vec<Vec<BigInt>>,
        coeffs: Vec<Poly>,
        vars: VarSpec,
    ) -> Result<Self, SymbolicError> {
        assert_eq!(roots.len(), coeffs.len());
        for alpha in &roots {
            if !is_root_for(fan, ray, alpha) {
                return Err(SymbolicError::NotARoot {
                    ray,
                    alpha: alpha.clone(),
                });
            }
        }
        Ok(OneParamMap {
            ray,
            roots,
            coeffs,
            vars,
        })
    }

    /// The plain family with coefficients `t_j` for `j` in `t_offset..`.
    pub fn standard(
        fan: &ValidatedFan,
        ray: usize,
        roots: Vec<Vec<BigInt>>,
        vars: VarSpec,
        t_offset: usize,
    ) -> Result<Self, SymbolicError> {
        let coeffs = (0..roots.len())
            .map(|j| Poly::t_var(vars, t_offset + j))
            .collect();
        OneParamMap::new(fan, ray, roots, coeffs, vars)
    }

    fn denominator_base(&self) -> Poly {
        let mut b = Poly::one(self.vars);
        for (alpha, c) in self.roots.iter().zip(&self.coeffs) {
            b = b.add(&c.mul(&Poly::x_monomial(self.vars, alpha)));
        }
        b
    }

    pub fn apply_poly(&self, fan: &ValidatedFan, p: &Poly) -> LaurentRational {
        if p.is_zero() {
            return LaurentRational::from_poly(Poly::zero(self.vars));
        }
        let ray = self.ray;
        let parts = p.split_by_x(|x| {
            i64::try_from(fan.ray_value(ray, x)).expect("ray values stay small")
        });
        let e_min = *parts.keys().next().expect("nonzero polynomial");
        let shift = if e_min < 0 { -e_min } else { 0 };
        let base = self.denominator_base();
        let mut num = Poly::zero(self.vars);
        for (e, part) in &parts {
            let power = u64::try_from(e + shift).expect("nonnegative after shift");
            num = num.add(&part.mul(&base.pow(power)));
        }
        let den = base.pow(u64::try_from(shift).expect("nonnegative"));
        LaurentRational::new(num, den)
    }

    pub fn apply_monomial(&self, fan: &ValidatedFan, beta: &[BigInt]) -> LaurentRational {
        self.apply_poly(fan, &Poly::x_monomial(self.vars, beta))
    }

    pub fn apply(&self, fan: &ValidatedFan, f: &LaurentRational) -> LaurentRational {
        self.apply_poly(fan, f.num())
            .div(&self.apply_poly(fan, f.den()))
    }
}

/// Apply the one-parameter family of the given roots of `ray` to the
/// monomial `x^alpha`, with formal parameters `t_0..t_l`.
pub fn apply_one_param(
    fan: &ValidatedFan,
    ray: usize,
    roots: &[Vec<BigInt>],
    alpha: &[BigInt],
) -> Result<LaurentRational, SymbolicError> {
    let vars = VarSpec::new(fan.rank(), roots.len(), 0);
    let map = OneParamMap::standard(fan, ray, roots.to_vec(), vars, 0)?;
    Ok(map.apply_monomial(fan, alpha))
}

/// All lattice vectors in `[-halfwidth, halfwidth]^rank`.
pub fn monomial_box(rank: usize, halfwidth: u32) -> Vec<Vec<BigInt>> {
    let radius = i64::from(halfwidth);
    let mut out = Vec::new();
    let mut cursor = vec![-radius; rank];
    'scan: loop {
        out.push(cursor.iter().map(|&x| BigInt::from(x)).collect());
        let mut j = rank;
        while j > 0 {
            j -= 1;
            if cursor[j] < radius {
                cursor[j] += 1;
                for c in cursor.iter_mut().skip(j + 1) {
                    *c = -radius;
                }
                continue 'scan;
            }
        }
        break;
    }
    out
}

fn violation(law: &str, ray: usize, monomial: &[BigInt]) -> SymbolicError {
    SymbolicError::LawViolation {
        law: law.to_string(),
        ray,
        monomial: monomial.to_vec(),
    }
}

/// Verify additivity in the parameters, the identity at zero, and the
/// inverse law, for the joint family of the given roots of one ray.
pub fn check_group_law(
    fan: &ValidatedFan,
    ray: usize,
    roots: &[Vec<BigInt>],
    monomials: &[Vec<BigInt>],
) -> Result<(), SymbolicError> {
    let l = roots.len();
    let vars = VarSpec::new(fan.rank(), 2 * l, 0);
    let tau_t = OneParamMap::standard(fan, ray, roots.to_vec(), vars, 0)?;
    let tau_s = OneParamMap::standard(fan, ray, roots.to_vec(), vars, l)?;
    let sum_coeffs: Vec<Poly> = (0..l)
        .map(|j| Poly::t_var(vars, j).add(&Poly::t_var(vars, l + j)))
        .collect();
    let tau_sum = OneParamMap::new(fan, ray, roots.to_vec(), sum_coeffs, vars)?;
    let neg_coeffs: Vec<Poly> = (0..l).map(|j| Poly::t_var(vars, j).neg()).collect();
    let tau_neg = OneParamMap::new(fan, ray, roots.to_vec(), neg_coeffs, vars)?;
    let zero_coeffs: Vec<Poly> = (0..l).map(|_| Poly::zero(vars)).collect();
    let tau_zero = OneParamMap::new(fan, ray, roots.to_vec(), zero_coeffs, vars)?;

    for beta in monomials {
        let plain = LaurentRational::from_poly(Poly::x_monomial(vars, beta));
        if tau_zero.apply_monomial(fan, beta) != plain {
            return Err(violation("identity at zero parameters", ray, beta));
        }
        let composed = tau_t.apply(fan, &tau_s.apply_monomial(fan, beta));
        if tau_sum.apply_monomial(fan, beta) != composed {
            return Err(violation("parameter additivity", ray, beta));
        }
        let round_trip = tau_t.apply(fan, &tau_neg.apply_monomial(fan, beta));
        if round_trip != plain {
            return Err(violation("inverse law", ray, beta));
        }
    }
    Ok(())
}

fn binomial_big(n: i64, k: i64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Check the applicable commutation statement for an ordered pair of roots
/// on distinct rays.
///
/// If both cross-values vanish the subgroups commute; if `v_j(r_i) = 0` and
/// `v_i(r_j) > 0`, conjugating the second family by the first lands in the
/// family over the shifted roots `r_j + k*r_i` with coefficients
/// `t' * C(v_i(r_j), k) * t^k`. Pairs meeting neither hypothesis (including
/// opposite semisimple pairs) are rejected as not applicable.
pub fn check_commutation(
    fan: &ValidatedFan,
    root_i: &Root,
    root_j: &Root,
    monomials: &[Vec<BigInt>],
) -> Result<CommutationCase, SymbolicError> {
    if root_i.ray == root_j.ray {
        return Err(SymbolicError::CaseNotApplicable);
    }
    let sum_zero = root_i
        .alpha
        .iter()
        .zip(&root_j.alpha)
        .all(|(a, b)| (a + b).is_zero());
    if sum_zero {
        return Err(SymbolicError::CaseNotApplicable);
    }
    let a = i64::try_from(fan.ray_value(root_i.ray, &root_j.alpha)).expect("small value");
    let b = i64::try_from(fan.ray_value(root_j.ray, &root_i.alpha)).expect("small value");

    let vars = VarSpec::new(fan.rank(), 2, 0);
    let tau_t = OneParamMap::standard(fan, root_i.ray, vec![root_i.alpha.clone()], vars, 0)?;
    let tau_s = OneParamMap::standard(fan, root_j.ray, vec![root_j.alpha.clone()], vars, 1)?;

    if a == 0 && b == 0 {
        for beta in monomials {
            let lhs = tau_t.apply(fan, &tau_s.apply_monomial(fan, beta));
            let rhs = tau_s.apply(fan, &tau_t.apply_monomial(fan, beta));
            if lhs != rhs {
                return Err(violation("commutation", root_i.ray, beta));
            }
        }
        return Ok(CommutationCase::Commuting);
    }
    if b == 0 && a > 0 {
        let tau_t_inv =
            OneParamMap::new(
                fan,
                root_i.ray,
                vec![root_i.alpha.clone()],
                vec![Poly::t_var(vars, 0).neg()],
                vars,
            )?;
        // conjugate family: roots r_j + k*r_i with coefficients t'*C(a,k)*t^k
        let mut conj_roots = Vec::new();
        let mut conj_coeffs = Vec::new();
        for k in 0..=a {
            let shifted: Vec<BigInt> = root_j
                .alpha
                .iter()
                .zip(&root_i.alpha)
                .map(|(rj, ri)| rj + ri * BigInt::from(k))
                .collect();
            let coeff = Poly::t_var(vars, 1)
                .mul(&Poly::t_var(vars, 0).pow(u64::try_from(k).expect("nonnegative")))
                .scale(&BigRational::from_integer(binomial_big(a, k)));
            conj_roots.push(shifted);
            conj_coeffs.push(coeff);
        }
        let tau_conj = OneParamMap::new(fan, root_j.ray, conj_roots, conj_coeffs, vars)?;
        for beta in monomials {
            let lhs = tau_t.apply(
                fan,
                &tau_s.apply(fan, &tau_t_inv.apply_monomial(fan, beta)),
            );
            let rhs = tau_conj.apply_monomial(fan, beta);
            if lhs != rhs {
                return Err(violation("conjugation", root_i.ray, beta));
            }
        }
        return Ok(CommutationCase::Conjugation);
    }
    Err(SymbolicError::CaseNotApplicable)
}

/// Verify that conjugating by a formal torus element rescales the parameter
/// by the monomial of the root's evaluation vector.
pub fn check_torus_conjugation(
    fan: &ValidatedFan,
    root: &Root,
    monomials: &[Vec<BigInt>],
) -> Result<(), SymbolicError> {
    let vars = VarSpec::new(fan.rank(), 1, fan.num_rays());
    let tau_t = OneParamMap::standard(fan, root.ray, vec![root.alpha.clone()], vars, 0)?;
    let scaled_coeff = Poly::t_var(vars, 0).mul(&Poly::lam_monomial(
        vars,
        &fan.value_vector(&root.alpha),
    ));
    let tau_scaled = OneParamMap::new(
        fan,
        root.ray,
        vec![root.alpha.clone()],
        vec![scaled_coeff],
        vars,
    )?;
    let twist = |p: &Poly, sign: i64| -> Poly {
        p.lam_twist(|x| {
            fan.value_vector(x)
                .into_iter()
                .map(|v| v * BigInt::from(sign))
                .collect()
        })
    };
    for beta in monomials {
        let start = twist(&Poly::x_monomial(vars, beta), -1);
        let inner = tau_t.apply_poly(fan, &start);
        let lhs = LaurentRational::new(twist(inner.num(), 1), twist(inner.den(), 1));
        let rhs = tau_scaled.apply_monomial(fan, beta);
        if lhs != rhs {
            return Err(violation("torus conjugation", root.ray, beta));
        }
    }
    Ok(())
}

/// Verify that the coefficient of `t` at `t = 0` in the action on `x^beta`
/// is `v_ray(beta) * x^{beta + alpha}`.
pub fn check_first_order_tangent(
    fan: &ValidatedFan,
    root: &Root,
    monomials: &[Vec<BigInt>],
) -> Result<(), SymbolicError> {
    let vars = VarSpec::new(fan.rank(), 1, 0);
    let tau_t = OneParamMap::standard(fan, root.ray, vec![root.alpha.clone()], vars, 0)?;
    for beta in monomials {
        let f = tau_t.apply_monomial(fan, beta);
        let p0 = f.num().t_coefficient(0);
        let p1 = f.num().t_coefficient(1);
        let q0 = f.den().t_coefficient(0);
        let q1 = f.den().t_coefficient(1);
        let shifted: Vec<BigInt> = beta.iter().zip(&root.alpha).map(|(b, a)| b + a).collect();
        let expected = Poly::x_monomial(vars, &shifted)
            .scale(&BigRational::from_integer(fan.ray_value(root.ray, beta)));
        // d/dt (p/q) at t=0 equals (p1 q0 - p0 q1) / q0^2
        let lhs = p1.mul(&q0).sub(&p0.mul(&q1));
        let rhs = expected.mul(&q0).mul(&q0);
        if lhs != rhs {
            return Err(violation("first-order tangent", root.ray, beta));
        }
    }
    Ok(())
}

/// Counters from a full verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub box_halfwidth: u32,
    pub monomials: usize,
    pub group_law_families: usize,
    pub commutation_pairs_checked: usize,
    pub commutation_pairs_skipped: usize,
    pub torus_conjugations: usize,
    pub tangent_checks: usize,
}

/// Run every check on every root and root pair of the fan, sampling
/// monomials from `[-halfwidth, halfwidth]^rank`.
pub fn verification_suite(
    fan: &ValidatedFan,
    roots: &[Root],
    halfwidth: u32,
) -> Result<SuiteReport, SymbolicError> {
    let monomials = monomial_box(fan.rank(), halfwidth);
    let mut report = SuiteReport {
        box_halfwidth: halfwidth,
        monomials: monomials.len(),
        group_law_families: 0,
        commutation_pairs_checked: 0,
        commutation_pairs_skipped: 0,
        torus_conjugations: 0,
        tangent_checks: 0,
    };
    for ray in 0..fan.num_rays() {
        let ray_roots: Vec<Vec<BigInt>> = roots
            .iter()
            .filter(|r| r.ray == ray)
            .map(|r| r.alpha.clone())
            .collect();
        if ray_roots.is_empty() {
            continue;
        }
        check_group_law(fan, ray, &ray_roots, &monomials)?;
        report.group_law_families += 1;
    }
    for ri in roots {
        for rj in roots {
            if ri.ray == rj.ray {
                continue;
            }
            match check_commutation(fan, ri, rj, &monomials) {
                Ok(_) => report.commutation_pairs_checked += 1,
                Err(SymbolicError::CaseNotApplicable) => {
                    report.commutation_pairs_skipped += 1
                }
                Err(e) => return Err(e),
            }
        }
    }
    for root in roots {
        check_torus_conjugation(fan, root, &monomials)?;
        report.torus_conjugations += 1;
        check_first_order_tangent(fan, root, &monomials)?;
        report.tangent_checks += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{validate, Fan};
    use crate::intlin::bigvec;
    use crate::roots::roots_of;
    use proptest::prelude::*;

    fn weighted121() -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -2]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        ))
        .unwrap()
    }

    fn hirzebruch(a: i64) -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        ))
        .unwrap()
    }

    fn p2() -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        ))
        .unwrap()
    }

    #[test]
    fn action_fixes_invariant_monomials() {
        let fan = weighted121();
        // v_2((1,0)) = 0, so x^(1,0) is fixed by the family of ray 1
        let out = apply_one_param(&fan, 1, &[bigvec(&[0, -1])], &bigvec(&[1, 0])).unwrap();
        let vars = out.vars();
        assert_eq!(
            out,
            LaurentRational::from_poly(Poly::x_monomial(vars, &bigvec(&[1, 0])))
        );
    }

    #[test]
    fn action_with_positive_exponent() {
        let fan = weighted121();
        let out = apply_one_param(&fan, 1, &[bigvec(&[0, -1])], &bigvec(&[0, 1])).unwrap();
        // x^(0,1) * (1 + t x^(0,-1)) = x^(0,1) + t
        let vars = out.vars();
        let expected = Poly::x_monomial(vars, &bigvec(&[0, 1]))
            .add(&Poly::t_var(vars, 0));
        assert_eq!(out, LaurentRational::from_poly(expected));
    }

    #[test]
    fn action_with_negative_exponent_has_denominator() {
        let fan = weighted121();
        let out = apply_one_param(&fan, 1, &[bigvec(&[0, -1])], &bigvec(&[0, -1])).unwrap();
        let vars = out.vars();
        let num = Poly::x_monomial(vars, &bigvec(&[0, -1]));
        let den = Poly::one(vars).add(
            &Poly::t_var(vars, 0).mul(&Poly::x_monomial(vars, &bigvec(&[0, -1]))),
        );
        assert_eq!(out, LaurentRational::new(num, den));
    }

    #[test]
    fn rejects_non_root() {
        let fan = weighted121();
        assert_eq!(
            apply_one_param(&fan, 0, &[bigvec(&[5, 5])], &bigvec(&[0, 0])),
            Err(SymbolicError::NotARoot {
                ray: 0,
                alpha: bigvec(&[5, 5])
            })
        );
    }

    #[test]
    fn group_law_on_weighted_fan() {
        let fan = weighted121();
        let monomials = monomial_box(2, 2);
        check_group_law(&fan, 1, &[bigvec(&[0, -1])], &monomials).unwrap();
    }

    #[test]
    fn group_law_with_two_joint_parameters() {
        let fan = hirzebruch(1);
        let monomials = monomial_box(2, 2);
        check_group_law(&fan, 3, &[bigvec(&[0, 1]), bigvec(&[1, 1])], &monomials).unwrap();
    }

    #[test]
    fn commutation_cases_on_first_hirzebruch_surface() {
        let fan = hirzebruch(1);
        let roots = roots_of(&fan).unwrap();
        let monomials = monomial_box(2, 2);
        let find = |alpha: &[BigInt]| roots.iter().find(|r| r.alpha == alpha).unwrap();
        // both cross-values vanish: the subgroups commute
        let commuting = check_commutation(
            &fan,
            find(&bigvec(&[0, 1])),
            find(&bigvec(&[-1, 0])),
            &monomials,
        )
        .unwrap();
        assert_eq!(commuting, CommutationCase::Commuting);
        // v_4((-1,0)) = 0 and v_1((1,1)) = 1: conjugation case
        let conj = check_commutation(
            &fan,
            find(&bigvec(&[-1, 0])),
            find(&bigvec(&[1, 1])),
            &monomials,
        )
        .unwrap();
        assert_eq!(conj, CommutationCase::Conjugation);
    }

    #[test]
    fn opposite_roots_are_not_applicable() {
        let fan = p2();
        let roots = roots_of(&fan).unwrap();
        let ri = roots.iter().find(|r| r.alpha == bigvec(&[1, 0])).unwrap();
        let rj = roots.iter().find(|r| r.alpha == bigvec(&[-1, 0])).unwrap();
        assert_eq!(
            check_commutation(&fan, ri, rj, &monomial_box(2, 1)),
            Err(SymbolicError::CaseNotApplicable)
        );
    }

    #[test]
    fn torus_conjugation_on_p2() {
        let fan = p2();
        let roots = roots_of(&fan).unwrap();
        let root = roots
            .iter()
            .find(|r| r.ray == 2 && r.alpha == bigvec(&[1, 0]))
            .unwrap();
        assert_eq!(fan.value_vector(&root.alpha), bigvec(&[1, 0, -1]));
        check_torus_conjugation(&fan, root, &monomial_box(2, 2)).unwrap();
    }

    #[test]
    fn tangent_identity_on_examples() {
        for fan in [p2(), weighted121()] {
            let roots = roots_of(&fan).unwrap();
            let monomials = monomial_box(2, 2);
            for root in &roots {
                check_first_order_tangent(&fan, root, &monomials).unwrap();
            }
        }
    }

    #[test]
    fn suite_runs_on_weighted_fan() {
        let fan = weighted121();
        let roots = roots_of(&fan).unwrap();
        let report = verification_suite(&fan, &roots, 2).unwrap();
        assert_eq!(report.monomials, 25);
        assert_eq!(report.group_law_families, 3);
        // 5 roots, of which 3 share a ray: 5*4 - 3*2 ordered cross-ray pairs
        assert_eq!(
            report.commutation_pairs_checked + report.commutation_pairs_skipped,
            14
        );
        assert_eq!(report.torus_conjugations, 5);
    }

    #[test]
    fn suite_covers_a_rank_three_bundle_fan() {
        // two rays of one class carry non-semisimple roots, so conjugation
        // runs with shifted-root families across classes
        let fan = validate(Fan::from_i64(
            3,
            &[
                &[1, 0, 0],
                &[0, 1, 0],
                &[-1, -1, 0],
                &[0, 0, 1],
                &[-1, -1, -1],
            ],
            &[
                &[0, 1, 3],
                &[0, 2, 3],
                &[1, 2, 3],
                &[0, 1, 4],
                &[0, 2, 4],
                &[1, 2, 4],
            ],
        ))
        .unwrap();
        let roots = roots_of(&fan).unwrap();
        let report = verification_suite(&fan, &roots, 1).unwrap();
        assert_eq!(report.monomials, 27);
        assert_eq!(report.torus_conjugations, 8);
        assert!(report.commutation_pairs_checked > 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn rational_equality_is_a_congruence(
            coeffs in proptest::collection::vec((-4i64..=4, -2i64..=2, -2i64..=2, 0u32..=2), 1..5),
            scale_coeffs in proptest::collection::vec((-4i64..=4, -2i64..=2, -2i64..=2, 0u32..=2), 1..3),
        ) {
            let vars = VarSpec::new(2, 1, 0);
            let build = |data: &[(i64, i64, i64, u32)]| {
                let mut p = Poly::zero(vars);
                for (c, e1, e2, te) in data {
                    let monomial = Poly::x_monomial(vars, &bigvec(&[*e1, *e2]))
                        .mul(&Poly::t_var(vars, 0).pow(u64::from(*te)))
                        .scale(&BigRational::from_integer(BigInt::from(*c)));
                    p = p.add(&monomial);
                }
                p
            };
            let p = build(&coeffs);
            let s = build(&scale_coeffs);
            prop_assume!(!s.is_zero());
            let den = Poly::one(vars).add(&Poly::t_var(vars, 0));
            let f = LaurentRational::new(p.clone(), den.clone());
            // scaling numerator and denominator by a common factor is invisible
            let g = LaurentRational::new(p.mul(&s), den.mul(&s));
            prop_assert_eq!(&f, &g);
            // and arithmetic respects the equivalence
            let h = LaurentRational::new(s.clone(), Poly::one(vars));
            prop_assert_eq!(f.add(&h), g.add(&h));
            prop_assert_eq!(f.mul(&h), g.mul(&h));
        }
    }
}

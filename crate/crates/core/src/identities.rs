//! Multilinear polynomial-identity checking by polarization over basis
//! tuples, plus probes for power-associativity and Artin two-generator
//! associativity.
//!
//! Over a characteristic-zero field a homogeneous-quadratic slot of an
//! identity vanishes identically iff its defect vanishes on all basis
//! vectors and all pairwise sums `e_i + e_j`; multilinear slots need basis
//! vectors only. Every `Fails` carries a witness tuple that reproduces a
//! nonzero defect when re-evaluated through the plain product. Witnesses are
//! minimal in lexicographic order of the slot enumerations (basis vectors
//! first, then pairwise sums), so results are deterministic.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::quadratic::basis_and_pair_sums;
use crate::{Error, Result};
use std::collections::HashMap;

/// Outcome of one identity check.
#[derive(Debug, Clone, serde::Serialize)]
pub enum Check {
    Holds,
    Fails { witness: Vec<Element> },
}

impl Check {
    pub fn fails(witness: Vec<Element>) -> Check {
        Check::Fails { witness }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&[Element]> {
        match self {
            Check::Holds => None,
            Check::Fails { witness } => Some(witness),
        }
    }
}

/// The linearizable identities of [`check_linearized_identity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum IdentityKind {
    Commutative,
    Associative,
    Flexible,
    LeftAlternative,
    RightAlternative,
}

impl IdentityKind {
    pub fn parse(name: &str) -> Option<IdentityKind> {
        match name {
            "commutative" => Some(IdentityKind::Commutative),
            "associative" => Some(IdentityKind::Associative),
            "flexible" => Some(IdentityKind::Flexible),
            "left-alternative" | "leftalt" => Some(IdentityKind::LeftAlternative),
            "right-alternative" | "rightalt" => Some(IdentityKind::RightAlternative),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SkornyakovSide {
    Left,
    Right,
}

/// How a power-associativity degree was established.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum PowerMethod {
    ExactPolarized,
    Sampled { seed: u64, samples: u32 },
}

/// Sampler settings for degrees beyond the exactly decided range.
#[derive(Debug, Clone, Copy)]
pub struct SamplerConfig {
    pub seed: u64,
    pub samples: u32,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig { seed: 0, samples: 8 }
    }
}

/// Result of [`power_associativity_probe`].
#[derive(Debug, Clone, serde::Serialize)]
pub struct PowerProbe {
    /// Largest degree k such that all parenthesizations of `a^j` agree for
    /// every j <= k (exactly for j <= 4, sampled beyond).
    pub verified_up_to: u32,
    pub method: PowerMethod,
    /// Counterexample element and the degree where it separated, if any.
    pub witness: Option<(u32, Element)>,
}

/// Aggregate report over the full identity taxonomy.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityReport {
    pub commutative: Check,
    pub associative: Check,
    pub flexible: Check,
    pub left_alternative: Check,
    pub right_alternative: Check,
    /// Conjunction of the two one-sided laws.
    pub alternative: Check,
    pub moufang: Check,
    pub skornyakov_left: Check,
    pub skornyakov_right: Check,
    pub power: PowerProbe,
}

/// Decides one of the linearizable identities exactly (rational modes) or
/// against the algebra tolerance (real modes).
pub fn check_linearized_identity(alg: &Algebra, kind: IdentityKind) -> Result<Check> {
    let tol = alg.tol();
    let n = alg.dim();
    match kind {
        IdentityKind::Commutative => {
            for i in 0..n {
                for j in 0..n {
                    let a = alg.basis_element(i);
                    let b = alg.basis_element(j);
                    if !alg.commutator(&a, &b)?.is_zero_tol(tol) {
                        return Ok(Check::fails(vec![a, b]));
                    }
                }
            }
            Ok(Check::Holds)
        }
        IdentityKind::Associative => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let a = alg.basis_element(i);
                        let b = alg.basis_element(j);
                        let c = alg.basis_element(k);
                        if !alg.associator(&a, &b, &c)?.is_zero_tol(tol) {
                            return Ok(Check::fails(vec![a, b, c]));
                        }
                    }
                }
            }
            Ok(Check::Holds)
        }
        IdentityKind::Flexible => two_slot_quadratic(alg, 0, |alg, a, b| {
            let ab_a = alg.multiply(&alg.multiply(a, b)?, a)?;
            let a_ba = alg.multiply(a, &alg.multiply(b, a)?)?;
            Ok(ab_a.sub(&a_ba))
        }),
        IdentityKind::LeftAlternative => two_slot_quadratic(alg, 0, |alg, a, b| {
            let a_ab = alg.multiply(a, &alg.multiply(a, b)?)?;
            let aa_b = alg.multiply(&alg.multiply(a, a)?, b)?;
            Ok(a_ab.sub(&aa_b))
        }),
        IdentityKind::RightAlternative => two_slot_quadratic(alg, 1, |alg, a, b| {
            let ab_b = alg.multiply(&alg.multiply(a, b)?, b)?;
            let a_bb = alg.multiply(a, &alg.multiply(b, b)?)?;
            Ok(ab_b.sub(&a_bb))
        }),
    }
}

/// Sweeps a two-slot defect whose `quad_slot` (0 = first, 1 = second) is
/// quadratic and whose other slot is linear.
fn two_slot_quadratic(
    alg: &Algebra,
    quad_slot: usize,
    defect: impl Fn(&Algebra, &Element, &Element) -> Result<Element>,
) -> Result<Check> {
    let tol = alg.tol();
    let quad = basis_and_pair_sums(alg);
    let lin: Vec<Element> = (0..alg.dim()).map(|i| alg.basis_element(i)).collect();
    let (first, second): (&[Element], &[Element]) = if quad_slot == 0 {
        (&quad, &lin)
    } else {
        (&lin, &quad)
    };
    for a in first {
        for b in second {
            if !defect(alg, a, b)?.is_zero_tol(tol) {
                return Ok(Check::fails(vec![a.clone(), b.clone()]));
            }
        }
    }
    Ok(Check::Holds)
}

/// Sweeps a three-slot defect that is quadratic in `quad_slot` and linear in
/// the other two.
fn three_slot_quadratic(
    alg: &Algebra,
    quad_slot: usize,
    defect: impl Fn(&Algebra, &Element, &Element, &Element) -> Result<Element>,
) -> Result<Check> {
    let tol = alg.tol();
    let quad = basis_and_pair_sums(alg);
    let lin: Vec<Element> = (0..alg.dim()).map(|i| alg.basis_element(i)).collect();
    let slot = |s: usize| -> &[Element] {
        if s == quad_slot {
            &quad
        } else {
            &lin
        }
    };
    for a in slot(0) {
        for b in slot(1) {
            for c in slot(2) {
                if !defect(alg, a, b, c)?.is_zero_tol(tol) {
                    return Ok(Check::fails(vec![a.clone(), b.clone(), c.clone()]));
                }
            }
        }
    }
    Ok(Check::Holds)
}

/// The three Moufang identities
/// `((ab)a)c = a(b(ac))`, `(ab)(ca) = (a(bc))a`, `a((bc)b) = ((ab)c)b`.
/// Returns the first failing identity's witness.
pub fn check_moufang(alg: &Algebra) -> Result<Check> {
    let first = three_slot_quadratic(alg, 0, |alg, a, b, c| {
        let lhs = alg.multiply(&alg.multiply(&alg.multiply(a, b)?, a)?, c)?;
        let rhs = alg.multiply(a, &alg.multiply(b, &alg.multiply(a, c)?)?)?;
        Ok(lhs.sub(&rhs))
    })?;
    if !first.holds() {
        return Ok(first);
    }
    let second = three_slot_quadratic(alg, 0, |alg, a, b, c| {
        let lhs = alg.multiply(&alg.multiply(a, b)?, &alg.multiply(c, a)?)?;
        let rhs = alg.multiply(&alg.multiply(a, &alg.multiply(b, c)?)?, a)?;
        Ok(lhs.sub(&rhs))
    })?;
    if !second.holds() {
        return Ok(second);
    }
    three_slot_quadratic(alg, 1, |alg, a, b, c| {
        let lhs = alg.multiply(a, &alg.multiply(&alg.multiply(b, c)?, b)?)?;
        let rhs = alg.multiply(&alg.multiply(&alg.multiply(a, b)?, c)?, b)?;
        Ok(lhs.sub(&rhs))
    })
}

/// Skornyakov's identities: left `(a(ba))c = a(b(ac))`, right
/// `a((bc)b) = ((ab)c)b`.
pub fn check_skornyakov(alg: &Algebra, side: SkornyakovSide) -> Result<Check> {
    match side {
        SkornyakovSide::Left => three_slot_quadratic(alg, 0, |alg, a, b, c| {
            let lhs = alg.multiply(&alg.multiply(a, &alg.multiply(b, a)?)?, c)?;
            let rhs = alg.multiply(a, &alg.multiply(b, &alg.multiply(a, c)?)?)?;
            Ok(lhs.sub(&rhs))
        }),
        SkornyakovSide::Right => three_slot_quadratic(alg, 1, |alg, a, b, c| {
            let lhs = alg.multiply(a, &alg.multiply(&alg.multiply(b, c)?, b)?)?;
            let rhs = alg.multiply(&alg.multiply(&alg.multiply(a, b)?, c)?, b)?;
            Ok(lhs.sub(&rhs))
        }),
    }
}

/// Decides whether the homogeneous degree-`d` map `form` vanishes
/// identically, by full finite-difference polarization over basis index
/// multituples. Returns a witness point with a nonzero value on failure.
fn polarized_form_zero(
    alg: &Algebra,
    degree: usize,
    forms: &[&dyn Fn(&Algebra, &Element) -> Result<Element>],
) -> Result<Option<(usize, Element)>> {
    let n = alg.dim();
    let tol = alg.tol();
    // Cache of form values at sums of basis vectors, keyed by the sorted
    // index multiset.
    let mut cache: HashMap<Vec<usize>, Vec<Element>> = HashMap::new();
    let mut tuple = vec![0usize; degree];
    loop {
        // Polarize: T = sum over nonempty sub-multisets S of the tuple of
        // (-1)^(d - |S|) form(sum of e_i over S).
        for (fi, _) in forms.iter().enumerate() {
            let mut acc = alg.zero_element();
            let mut bad_point: Option<Element> = None;
            for mask in 1u32..(1 << degree) {
                let mut key: Vec<usize> = (0..degree)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| tuple[b])
                    .collect();
                key.sort_unstable();
                if !cache.contains_key(&key) {
                    let mut point = alg.zero_element();
                    for &i in &key {
                        point = point.add(&alg.basis_element(i));
                    }
                    let values: Result<Vec<Element>> =
                        forms.iter().map(|f| f(alg, &point)).collect();
                    cache.insert(key.clone(), values?);
                }
                let value = &cache[&key][fi];
                if bad_point.is_none() && !value.is_zero_tol(tol) {
                    let mut point = alg.zero_element();
                    for &i in &key {
                        point = point.add(&alg.basis_element(i));
                    }
                    bad_point = Some(point);
                }
                let sign_negative = (degree - mask.count_ones() as usize) % 2 == 1;
                acc = if sign_negative { acc.sub(value) } else { acc.add(value) };
            }
            if !acc.is_zero_tol(tol) {
                // The polarization is a signed sum of form values, so some
                // evaluated point must witness a nonzero defect directly.
                let witness = bad_point.expect("nonzero polarization has a nonzero term");
                return Ok(Some((fi, witness)));
            }
        }
        // Next nondecreasing tuple.
        let mut pos = degree;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            if tuple[pos] + 1 < n {
                let v = tuple[pos] + 1;
                for item in tuple.iter_mut().skip(pos) {
                    *item = v;
                }
                break;
            }
        }
    }
}

/// Power-associativity probe. Degrees 3 and 4 are decided exactly by
/// polarization; degrees `5..=max_degree` compare all parenthesizations of
/// `a^k` on seeded random elements. Degree 2 is trivially associative.
pub fn power_associativity_probe(
    alg: &Algebra,
    max_degree: u32,
    sampler: SamplerConfig,
) -> Result<PowerProbe> {
    if max_degree < 3 {
        return Err(Error::Invalid("max_degree must be at least 3".into()));
    }
    let method = if max_degree <= 4 {
        PowerMethod::ExactPolarized
    } else {
        PowerMethod::Sampled {
            seed: sampler.seed,
            samples: sampler.samples,
        }
    };
    // Degree 3: (aa)a = a(aa) as a cubic form.
    let cubic = |alg: &Algebra, a: &Element| -> Result<Element> {
        let sq = alg.multiply(a, a)?;
        Ok(alg.multiply(&sq, a)?.sub(&alg.multiply(a, &sq)?))
    };
    if let Some((_, witness)) = polarized_form_zero(alg, 3, &[&cubic])? {
        return Ok(PowerProbe {
            verified_up_to: 2,
            method,
            witness: Some((3, witness)),
        });
    }
    if max_degree == 3 {
        return Ok(PowerProbe {
            verified_up_to: 3,
            method,
            witness: None,
        });
    }
    // Degree 4, given degree 3: the five parenthesizations reduce to
    // (a(aa))a, (aa)(aa) and a(a(aa)).
    let quartic_outer = |alg: &Algebra, a: &Element| -> Result<Element> {
        let sq = alg.multiply(a, a)?;
        let cube = alg.multiply(a, &sq)?;
        Ok(alg.multiply(&cube, a)?.sub(&alg.multiply(a, &cube)?))
    };
    let quartic_square = |alg: &Algebra, a: &Element| -> Result<Element> {
        let sq = alg.multiply(a, a)?;
        let cube = alg.multiply(a, &sq)?;
        Ok(alg.multiply(&sq, &sq)?.sub(&alg.multiply(a, &cube)?))
    };
    if let Some((_, witness)) = polarized_form_zero(alg, 4, &[&quartic_outer, &quartic_square])? {
        return Ok(PowerProbe {
            verified_up_to: 3,
            method,
            witness: Some((4, witness)),
        });
    }
    let mut verified = 4u32;
    // Sampled degrees: all parenthesizations of a^k on random elements.
    let mut rng = crate::sample::rng(sampler.seed);
    for degree in 5..=max_degree {
        for _ in 0..sampler.samples {
            let a = crate::sample::random_nonzero_element(alg, &mut rng, 3);
            let values = all_parenthesized_powers(alg, &a, degree as usize)?;
            let reference = &values[0];
            if let Some(v) = values.iter().find(|v| !v.sub(reference).is_zero_tol(alg.tol())) {
                let _ = v;
                return Ok(PowerProbe {
                    verified_up_to: verified,
                    method,
                    witness: Some((degree, a)),
                });
            }
        }
        verified = degree;
    }
    Ok(PowerProbe {
        verified_up_to: verified,
        method,
        witness: None,
    })
}

/// Every full parenthesization of the k-fold product of `a`.
pub fn all_parenthesized_powers(alg: &Algebra, a: &Element, k: usize) -> Result<Vec<Element>> {
    fn build(alg: &Algebra, a: &Element, k: usize, memo: &mut Vec<Option<Vec<Element>>>) -> Result<Vec<Element>> {
        if let Some(v) = &memo[k] {
            return Ok(v.clone());
        }
        let out = if k == 1 {
            vec![a.clone()]
        } else {
            let mut out = Vec::new();
            for split in 1..k {
                let lefts = build(alg, a, split, memo)?;
                let rights = build(alg, a, k - split, memo)?;
                for l in &lefts {
                    for r in &rights {
                        out.push(alg.multiply(l, r)?);
                    }
                }
            }
            out
        };
        memo[k] = Some(out.clone());
        Ok(out)
    }
    let mut memo = vec![None; k + 1];
    build(alg, a, k, &mut memo)
}

/// Outcome of the Artin two-generator probe.
#[derive(Debug, Clone, serde::Serialize)]
pub enum ArtinOutcome {
    Associative,
    Fails { witness: Vec<Element> },
}

/// Closes the subalgebra generated by `a` and `b` and decides associativity
/// on the restriction. A failing witness is mapped back to ambient elements.
pub fn artin_probe(alg: &Algebra, a: &Element, b: &Element) -> Result<ArtinOutcome> {
    let closure = alg.subalgebra_closure(&[a.clone(), b.clone()], false)?;
    match check_linearized_identity(&closure.restricted, IdentityKind::Associative)? {
        Check::Holds => Ok(ArtinOutcome::Associative),
        Check::Fails { witness } => {
            let lift = |w: &Element| -> Element {
                let mut out = alg.zero_element();
                for (k, c) in w.coords().iter().enumerate() {
                    if !c.is_zero() {
                        out = out.add(&closure.basis[k].scale(c));
                    }
                }
                out
            };
            Ok(ArtinOutcome::Fails {
                witness: witness.iter().map(lift).collect(),
            })
        }
    }
}

/// Runs the whole taxonomy.
pub fn report(alg: &Algebra, max_degree: u32, sampler: SamplerConfig) -> Result<IdentityReport> {
    let commutative = check_linearized_identity(alg, IdentityKind::Commutative)?;
    let associative = check_linearized_identity(alg, IdentityKind::Associative)?;
    let flexible = check_linearized_identity(alg, IdentityKind::Flexible)?;
    let left_alternative = check_linearized_identity(alg, IdentityKind::LeftAlternative)?;
    let right_alternative = check_linearized_identity(alg, IdentityKind::RightAlternative)?;
    let alternative = match (&left_alternative, &right_alternative) {
        (Check::Holds, Check::Holds) => Check::Holds,
        (Check::Fails { witness }, _) | (_, Check::Fails { witness }) => {
            Check::fails(witness.clone())
        }
    };
    Ok(IdentityReport {
        commutative,
        associative,
        flexible,
        left_alternative,
        right_alternative,
        alternative,
        moufang: check_moufang(alg)?,
        skornyakov_left: check_skornyakov(alg, SkornyakovSide::Left)?,
        skornyakov_right: check_skornyakov(alg, SkornyakovSide::Right)?,
        power: power_associativity_probe(alg, max_degree, sampler)?,
    })
}

/// Guard used by spectrum computations, which presume alternativity.
pub fn require_alternative(alg: &Algebra) -> Result<()> {
    if !check_linearized_identity(alg, IdentityKind::LeftAlternative)?.holds()
        || !check_linearized_identity(alg, IdentityKind::RightAlternative)?.holds()
    {
        return Err(Error::Invalid(
            "algebra is not alternative; use the one-sided spectrum".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{builtin, Builtin};
    use crate::scalar::{Mode, Scalar};

    fn get(b: Builtin) -> Algebra {
        builtin(b, Mode::Rational).unwrap()
    }

    #[test]
    fn octonions_are_alternative_but_not_associative() {
        let o = get(Builtin::Octonions);
        assert!(check_linearized_identity(&o, IdentityKind::LeftAlternative).unwrap().holds());
        assert!(check_linearized_identity(&o, IdentityKind::RightAlternative).unwrap().holds());
        assert!(check_linearized_identity(&o, IdentityKind::Flexible).unwrap().holds());
        assert!(!check_linearized_identity(&o, IdentityKind::Associative).unwrap().holds());
        assert!(!check_linearized_identity(&o, IdentityKind::Commutative).unwrap().holds());
    }

    #[test]
    fn sedenions_fail_left_alternativity_with_a_sound_witness() {
        let s = get(Builtin::Sedenions);
        match check_linearized_identity(&s, IdentityKind::LeftAlternative).unwrap() {
            Check::Fails { witness } => {
                // The raw identity a(ab) = (aa)b fails on the witness.
                let (a, b) = (&witness[0], &witness[1]);
                let lhs = s.multiply(a, &s.multiply(a, b).unwrap()).unwrap();
                let rhs = s.multiply(&s.multiply(a, a).unwrap(), b).unwrap();
                assert!(!lhs.sub(&rhs).is_zero());
            }
            Check::Holds => panic!("sedenions are not left alternative"),
        }
        assert!(check_linearized_identity(&s, IdentityKind::Flexible).unwrap().holds());
    }

    #[test]
    fn moufang_and_skornyakov() {
        let h = get(Builtin::Quaternions);
        let o = get(Builtin::Octonions);
        let s = get(Builtin::Sedenions);
        assert!(check_moufang(&h).unwrap().holds());
        assert!(check_moufang(&o).unwrap().holds());
        assert!(check_skornyakov(&h, SkornyakovSide::Right).unwrap().holds());
        assert!(check_skornyakov(&o, SkornyakovSide::Left).unwrap().holds());
        assert!(check_skornyakov(&o, SkornyakovSide::Right).unwrap().holds());

        match check_moufang(&s).unwrap() {
            Check::Fails { witness } => assert_eq!(witness.len(), 3),
            Check::Holds => panic!("sedenions fail the Moufang identities"),
        }
        assert!(!check_skornyakov(&s, SkornyakovSide::Left).unwrap().holds());
    }

    #[test]
    fn ladder_of_cayley_dickson_identity_flags() {
        let expectations: [(Builtin, bool, bool, bool, bool); 5] = [
            (Builtin::Reals, true, true, true, true),
            (Builtin::Complexes, true, true, true, true),
            (Builtin::Quaternions, false, true, true, true),
            (Builtin::Octonions, false, false, true, true),
            (Builtin::Sedenions, false, false, false, true),
        ];
        for (which, comm, assoc, alt, flex) in expectations {
            let alg = get(which.clone());
            assert_eq!(
                check_linearized_identity(&alg, IdentityKind::Commutative).unwrap().holds(),
                comm,
                "{which:?} commutative"
            );
            assert_eq!(
                check_linearized_identity(&alg, IdentityKind::Associative).unwrap().holds(),
                assoc,
                "{which:?} associative"
            );
            let left = check_linearized_identity(&alg, IdentityKind::LeftAlternative).unwrap();
            let right = check_linearized_identity(&alg, IdentityKind::RightAlternative).unwrap();
            assert_eq!(left.holds() && right.holds(), alt, "{which:?} alternative");
            assert_eq!(
                check_linearized_identity(&alg, IdentityKind::Flexible).unwrap().holds(),
                flex,
                "{which:?} flexible"
            );
        }
    }

    #[test]
    fn power_probe_on_sedenions_and_octonions() {
        let s = get(Builtin::Sedenions);
        let probe = power_associativity_probe(&s, 4, SamplerConfig::default()).unwrap();
        assert_eq!(probe.verified_up_to, 4);
        assert_eq!(probe.method, PowerMethod::ExactPolarized);
        assert!(probe.witness.is_none());

        let o = get(Builtin::Octonions);
        let probe = power_associativity_probe(&o, 6, SamplerConfig { seed: 5, samples: 4 }).unwrap();
        assert_eq!(probe.verified_up_to, 6);
        assert!(matches!(probe.method, PowerMethod::Sampled { seed: 5, samples: 4 }));
    }

    #[test]
    fn broken_table_yields_a_degree_three_witness() {
        // Quaternions with one sign flipped: e1 e2 = -e3 while e2 e1 = -e3.
        let h = get(Builtin::Quaternions);
        let n = 4;
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = h.table_entry(i, j, k).clone();
                    if (i, j, k) == (1, 2, 3) {
                        table.push(-&c);
                    } else {
                        table.push(c);
                    }
                }
            }
        }
        let broken = Algebra::new(n, Mode::Rational, table).unwrap();
        let probe = power_associativity_probe(&broken, 3, SamplerConfig::default()).unwrap();
        assert_eq!(probe.verified_up_to, 2);
        let (degree, witness) = probe.witness.expect("degree-3 witness");
        assert_eq!(degree, 3);
        let sq = broken.multiply(&witness, &witness).unwrap();
        let lhs = broken.multiply(&sq, &witness).unwrap();
        let rhs = broken.multiply(&witness, &sq).unwrap();
        assert!(!lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn artin_probe_examples() {
        let o = get(Builtin::Octonions);
        let mut rng = crate::sample::rng(17);
        for _ in 0..5 {
            let a = crate::sample::random_element(&o, &mut rng, 3);
            let b = crate::sample::random_element(&o, &mut rng, 3);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            assert!(matches!(
                artin_probe(&o, &a, &b).unwrap(),
                ArtinOutcome::Associative
            ));
        }

        // Sedenions: some pairs generate a nonassociative subalgebra; the
        // witnesses must reproduce in the ambient algebra.
        let s = get(Builtin::Sedenions);
        let mut found = false;
        let mut rng = crate::sample::rng(23);
        for _ in 0..10 {
            let a = crate::sample::random_element(&s, &mut rng, 2);
            let b = crate::sample::random_element(&s, &mut rng, 2);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            if let ArtinOutcome::Fails { witness } = artin_probe(&s, &a, &b).unwrap() {
                let d = s.associator(&witness[0], &witness[1], &witness[2]).unwrap();
                assert!(!d.is_zero());
                found = true;
                break;
            }
        }
        assert!(found, "sedenions are not alternative, so some pair must fail");

        // a = b reduces to the singly generated subalgebra.
        let a = s.basis_element(1);
        assert!(matches!(
            artin_probe(&s, &a, &a).unwrap(),
            ArtinOutcome::Associative
        ));
    }

    #[test]
    fn polarization_witnesses_are_sound_for_quadratic_slots() {
        // On the scrambled sedenions the left-alternative witness must
        // reproduce a nonzero raw defect (soundness of the sweep).
        let s = get(Builtin::Sedenions);
        let mut rng = crate::sample::rng(41);
        let p = crate::sample::random_unimodular_matrix(16, Mode::Rational, &mut rng);
        let scrambled = s.change_of_basis(&p).unwrap();
        if let Check::Fails { witness } =
            check_linearized_identity(&scrambled, IdentityKind::LeftAlternative).unwrap()
        {
            let (a, b) = (&witness[0], &witness[1]);
            let lhs = scrambled.multiply(a, &scrambled.multiply(a, b).unwrap()).unwrap();
            let rhs = scrambled.multiply(&scrambled.multiply(a, a).unwrap(), b).unwrap();
            assert!(!lhs.sub(&rhs).is_zero());
        } else {
            panic!("scrambled sedenions stay non-alternative");
        }
    }

    #[test]
    fn report_is_internally_consistent() {
        let o = get(Builtin::Octonions);
        let r = report(&o, 4, SamplerConfig::default()).unwrap();
        assert!(r.alternative.holds());
        assert!(r.left_alternative.holds() && r.right_alternative.holds());
        assert!(r.moufang.holds());
        assert_eq!(r.power.verified_up_to, 4);
        let _ = Scalar::zero(Mode::Rational);
    }
}

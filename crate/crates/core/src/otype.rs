//! Families of octahedral type `O` and `O^(2)`: six (twelve) group
//! elements realizing the octahedral rack (its square) under conjugation.
//!
//! The octahedral product `i ▷ j` is always read from the rack module's
//! transcribed table, never re-derived from rotation geometry. As in
//! [`crate::dtype`], consequence laws that provably follow from the
//! verified relations are asserted as oracles whose failure is a defect.

use serde::Serialize;

use crate::dtype::{Defect, FamilyError};
use crate::group::{all_compatible, GroupElement};
use crate::perm::Permutation;
use crate::rack::{octahedral_rack, RackTable};

/// A verified family of type `O`: `σ_i ▷ σ_j = σ_{i▷j}` against the
/// octahedral table (members indexed `0..6` for labels `1..6`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OctaFamily<G: GroupElement> {
    sigma: Vec<G>,
}

impl<G: GroupElement> OctaFamily<G> {
    pub fn members(&self) -> &[G] {
        &self.sigma
    }

    /// `σ_i` by 1-based label.
    pub fn s(&self, i: usize) -> &G {
        &self.sigma[i - 1]
    }
}

/// A verified pair of interleaved `O` families with the 72 cross relations
/// and an optional transporter `g ▷ σ_1 = τ_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Octa2Family<G: GroupElement> {
    sigma: OctaFamily<G>,
    tau: OctaFamily<G>,
    g: Option<G>,
}

impl<G: GroupElement> Octa2Family<G> {
    pub fn sigma(&self) -> &OctaFamily<G> {
        &self.sigma
    }

    pub fn tau(&self) -> &OctaFamily<G> {
        &self.tau
    }

    pub fn transporter(&self) -> Option<&G> {
        self.g.as_ref()
    }

    pub fn all_members(&self) -> impl Iterator<Item = &G> {
        self.sigma.sigma.iter().chain(self.tau.sigma.iter())
    }
}

/// Common fourth power and common mixed product of a verified `O` family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctaConsequences<G: GroupElement> {
    pub fourth_power: G,
    pub common_product: G,
}

fn octa(table: &RackTable, i: usize, j: usize) -> usize {
    table.apply(i, j)
}

fn check_distinct<G: GroupElement>(members: &[G]) -> Result<(), FamilyError> {
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if members[i] == members[j] {
                return Err(FamilyError::Duplicate { i, j });
            }
        }
    }
    Ok(())
}

/// Checks distinctness and all 36 relations against the octahedral table.
pub fn verify_octa<G: GroupElement>(members: Vec<G>) -> Result<OctaFamily<G>, FamilyError> {
    if members.len() != 6 {
        return Err(FamilyError::WrongCount {
            expected: 6,
            got: members.len(),
        });
    }
    if !all_compatible(&members) {
        return Err(FamilyError::Incompatible);
    }
    check_distinct(&members)?;
    let table = octahedral_rack();
    for i in 0..6 {
        for j in 0..6 {
            if members[i].conj(&members[j]) != members[octa(&table, i, j)] {
                return Err(FamilyError::Relation {
                    family: "octa",
                    i,
                    j,
                });
            }
        }
    }
    Ok(OctaFamily { sigma: members })
}

/// The ten-identity reduction: only the first two table rows (off the
/// diagonal) are checked; acceptance implies the full 36, which are
/// re-verified as a correctness assertion.
pub fn octa_from_reduced<G: GroupElement>(members: Vec<G>) -> Result<OctaFamily<G>, FamilyError> {
    if members.len() != 6 {
        return Err(FamilyError::WrongCount {
            expected: 6,
            got: members.len(),
        });
    }
    if !all_compatible(&members) {
        return Err(FamilyError::Incompatible);
    }
    check_distinct(&members)?;
    let s = |i: usize| &members[i - 1];
    let identities: [(&'static str, usize, usize, usize); 10] = [
        ("1▷2=5", 1, 2, 5),
        ("1▷3=2", 1, 3, 2),
        ("1▷4=3", 1, 4, 3),
        ("1▷5=4", 1, 5, 4),
        ("1▷6=6", 1, 6, 6),
        ("2▷1=3", 2, 1, 3),
        ("2▷3=6", 2, 3, 6),
        ("2▷4=4", 2, 4, 4),
        ("2▷5=1", 2, 5, 1),
        ("2▷6=5", 2, 6, 5),
    ];
    for (name, i, j, k) in identities {
        if s(i).conj(s(j)) != *s(k) {
            return Err(FamilyError::IdentityFailed(name));
        }
    }
    verify_octa(members).map_err(|e| match e {
        FamilyError::Defect(d) => FamilyError::Defect(d),
        other => Defect {
            law: "octa-reduction".into(),
            detail: format!("the ten identities hold but the full 36 fail: {other}"),
        }
        .into(),
    })
}

/// Asserts the four consequence identities of a verified `O` family and
/// returns the common fourth power `σ_i^4` and common product `σ_1 σ_6`.
pub fn octa_consequences<G: GroupElement>(
    fam: &OctaFamily<G>,
) -> Result<OctaConsequences<G>, FamilyError> {
    let s = |i: usize| fam.s(i);
    let fourth = s(1).int_pow(4);
    for i in 2..=6 {
        if s(i).int_pow(4) != fourth {
            return Err(Defect {
                law: "octa-fourth-powers".into(),
                detail: format!("sigma_{i}^4 differs from sigma_1^4"),
            }
            .into());
        }
    }
    let prod = s(1).op(s(6));
    if s(2).op(s(4)) != prod || s(3).op(s(5)) != prod {
        return Err(Defect {
            law: "octa-antipodal-products".into(),
            detail: "sigma_1 sigma_6, sigma_2 sigma_4, sigma_3 sigma_5 differ".into(),
        }
        .into());
    }
    let s1_3 = s(1).int_pow(3);
    let lhs3 = s(2).int_pow(2).op(&s(5).int_pow(2));
    if lhs3 != s1_3.op(s(6)) || s(3).int_pow(2).op(&s(2).int_pow(2)) != s1_3.op(s(6)) {
        return Err(Defect {
            law: "octa-square-products".into(),
            detail: "sigma_2^2 sigma_5^2 = sigma_1^3 sigma_6 = sigma_3^2 sigma_2^2 fails".into(),
        }
        .into());
    }
    let s6_3 = s(6).int_pow(3);
    let lhs4 = s(5).int_pow(2).op(&s(2).int_pow(2));
    if lhs4 != s(1).op(&s6_3) || s(2).int_pow(2).op(&s(3).int_pow(2)) != s(1).op(&s6_3) {
        return Err(Defect {
            law: "octa-square-products".into(),
            detail: "sigma_5^2 sigma_2^2 = sigma_1 sigma_6^3 = sigma_2^2 sigma_3^2 fails".into(),
        }
        .into());
    }
    Ok(OctaConsequences {
        fourth_power: fourth,
        common_product: prod,
    })
}

/// Checks the 72 cross relations and 12-way distinctness, then asserts the
/// six mixed-product consequence identities.
pub fn verify_octa2<G: GroupElement>(
    sigma: OctaFamily<G>,
    tau: OctaFamily<G>,
    g: Option<G>,
) -> Result<Octa2Family<G>, FamilyError> {
    if !sigma.sigma[0].compatible(&tau.sigma[0]) {
        return Err(FamilyError::Incompatible);
    }
    for (i, a) in sigma.sigma.iter().enumerate() {
        for (j, b) in tau.sigma.iter().enumerate() {
            if a == b {
                return Err(FamilyError::Overlap { i, j });
            }
        }
    }
    let table = octahedral_rack();
    for i in 0..6 {
        for j in 0..6 {
            let h = octa(&table, i, j);
            if sigma.sigma[i].conj(&tau.sigma[j]) != tau.sigma[h] {
                return Err(FamilyError::CrossRelation {
                    which: "sigma ▷ tau",
                    i,
                    j,
                });
            }
            if tau.sigma[i].conj(&sigma.sigma[j]) != sigma.sigma[h] {
                return Err(FamilyError::CrossRelation {
                    which: "tau ▷ sigma",
                    i,
                    j,
                });
            }
        }
    }
    if let Some(g) = &g {
        if !g.compatible(&sigma.sigma[0]) {
            return Err(FamilyError::Incompatible);
        }
        if g.conj(&sigma.sigma[0]) != tau.sigma[0] {
            return Err(FamilyError::TransporterMismatch);
        }
    }
    let fam = Octa2Family { sigma, tau, g };
    octa2_consequences(&fam)?;
    Ok(fam)
}

/// The six consequence identities relating the `σ` and `τ` halves of a
/// verified `O^(2)` family; failures are defects.
pub fn octa2_consequences<G: GroupElement>(fam: &Octa2Family<G>) -> Result<(), FamilyError> {
    let s = |i: usize| fam.sigma.s(i);
    let t = |i: usize| fam.tau.s(i);
    let defect = |detail: String| -> FamilyError {
        Defect {
            law: "octa2-mixed-products".into(),
            detail,
        }
        .into()
    };
    // (i) all six antipodal mixed products coincide
    let prod = s(1).op(t(6));
    for (a, b) in [(6, 1), (2, 4), (4, 2), (3, 5), (5, 3)] {
        if s(a).op(t(b)) != prod {
            return Err(defect(format!("sigma_{a} tau_{b} != sigma_1 tau_6")));
        }
    }
    // (ii) sigma_j^{-1} tau_j is constant
    let ratio = s(1).inverse().op(t(1));
    for j in 2..=6 {
        if s(j).inverse().op(t(j)) != ratio {
            return Err(defect(format!("sigma_{j}^-1 tau_{j} != sigma_1^-1 tau_1")));
        }
    }
    // (iii)
    if t(2).int_pow(-2).op(s(5)).op(t(5)) != t(1).inverse().op(s(6)) {
        return Err(defect("tau_2^-2 sigma_5 tau_5 != tau_1^-1 sigma_6".into()));
    }
    // (iv)
    if t(2).int_pow(-2).op(s(3)).op(t(3)) != s(1).op(&t(6).inverse()) {
        return Err(defect("tau_2^-2 sigma_3 tau_3 != sigma_1 tau_6^-1".into()));
    }
    // (v)
    if s(2).int_pow(-2).op(s(5)).op(t(5)) != s(1).int_pow(-2).op(t(1)).op(s(6)) {
        return Err(defect(
            "sigma_2^-2 sigma_5 tau_5 != sigma_1^-2 tau_1 sigma_6".into(),
        ));
    }
    // (vi)
    if s(2).int_pow(-2).op(s(3)).op(t(3)) != t(1).op(&s(6).inverse()) {
        return Err(defect("sigma_2^-2 sigma_3 tau_3 != tau_1 sigma_6^-1".into()));
    }
    Ok(())
}

// Cycle-word templates for the eight-cycle construction: positions into
// the word of each 8-cycle of sigma.
const W_SIGMA: [[usize; 8]; 4] = [
    [1, 3, 8, 6, 5, 7, 4, 2], // sigma_2
    [1, 8, 2, 7, 5, 4, 6, 3], // sigma_3
    [1, 6, 4, 3, 5, 2, 8, 7], // sigma_4
    [1, 7, 6, 8, 5, 3, 2, 4], // sigma_5
];
const W_TAU: [[usize; 8]; 4] = [
    [1, 7, 8, 2, 5, 3, 4, 6], // tau_2
    [1, 4, 2, 3, 5, 8, 6, 7], // tau_3
    [1, 2, 4, 7, 5, 6, 8, 3], // tau_4
    [1, 3, 6, 4, 5, 7, 2, 8], // tau_5
];

/// The `O^(2)` family attached to a permutation of type
/// `(1^{n_1}, 2^{n_2}, 8^{n_8})` with `n_8 ∈ {1, 2}`: the displayed cycle
/// words on each 8-cycle support times the residual factor, with
/// `σ_6 = σ^3`, `τ_1 = σ^5`, `τ_6 = σ^{-1}` as exact powers.
/// Returns the family and the power exponents `(d, e) = (3, 5)`.
pub fn sym_o2_8cycle(
    sigma: &Permutation,
) -> Result<(Octa2Family<Permutation>, i64, i64), FamilyError> {
    let t = sigma.cycle_type();
    if t.parts().any(|(j, _)| j != 1 && j != 2 && j != 8) {
        return Err(FamilyError::Hypothesis(format!(
            "cycle type must be (1^a, 2^b, 8^c), got {t}"
        )));
    }
    let n8 = t.multiplicity(8);
    if n8 == 0 {
        return Err(FamilyError::Hypothesis("no 8-cycle present".into()));
    }
    if n8 >= 3 {
        return Err(FamilyError::Hypothesis(
            "n_8 >= 3: use the three-even-cycles construction instead".into(),
        ));
    }
    let m = sigma.degree();
    let eight_cycles: Vec<Vec<usize>> = sigma
        .cycles()
        .into_iter()
        .filter(|c| c.len() == 8)
        .collect();
    let a8 = {
        let one_based: Vec<Vec<usize>> = eight_cycles
            .iter()
            .map(|c| c.iter().map(|&x| x + 1).collect())
            .collect();
        let refs: Vec<&[usize]> = one_based.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(m, &refs).unwrap()
    };
    let alpha = sigma.compose(&a8.inverse()).unwrap();

    let instantiate = |template: &[usize; 8]| -> Permutation {
        let cycles: Vec<Vec<usize>> = eight_cycles
            .iter()
            .map(|word| template.iter().map(|&pos| word[pos - 1]).collect())
            .collect();
        perm_word(m, &cycles).compose(&alpha).unwrap()
    };

    let mut sigmas = vec![sigma.clone()];
    sigmas.extend(W_SIGMA.iter().map(instantiate));
    sigmas.push(sigma.power(3));
    let mut taus = vec![sigma.power(5)];
    taus.extend(W_TAU.iter().map(instantiate));
    taus.push(sigma.power(-1));

    let g = sigma
        .relabeling_onto(&taus[0])
        .map_err(|_| FamilyError::Hypothesis("sigma^5 left the class".into()))?;

    let sf = verify_octa(sigmas).map_err(|e| match e {
        FamilyError::Defect(d) => FamilyError::Defect(d),
        other => FamilyError::from(Defect {
            law: "eight-cycle-family".into(),
            detail: format!("(sigma_i) is not of type O: {other}"),
        }),
    })?;
    let tf = verify_octa(taus).map_err(|e| match e {
        FamilyError::Defect(d) => FamilyError::Defect(d),
        other => FamilyError::from(Defect {
            law: "eight-cycle-family".into(),
            detail: format!("(tau_i) is not of type O: {other}"),
        }),
    })?;
    let fam = verify_octa2(sf, tf, Some(g)).map_err(|e| match e {
        FamilyError::Defect(d) => FamilyError::Defect(d),
        other => FamilyError::from(Defect {
            law: "eight-cycle-family".into(),
            detail: format!("cross relations fail: {other}"),
        }),
    })?;
    Ok((fam, 3, 5))
}

fn perm_word(m: usize, cycles: &[Vec<usize>]) -> Permutation {
    let one_based: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| c.iter().map(|&x| x + 1).collect())
        .collect();
    let refs: Vec<&[usize]> = one_based.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(m, &refs).expect("templates permute the word")
}

/// One classified transporter twist `g_{i▷j}^{-1} · a_i · g_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistEntry {
    /// 1-based indices into the 12-element family (σ first, then τ).
    pub i: usize,
    pub j: usize,
    /// Which parity class applied: "ss", "tt", "st" or "ts".
    pub class: &'static str,
    /// Exponents over that class's generator list; their sum is odd.
    pub exponents: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistReport {
    pub entries: Vec<TwistEntry>,
}

const WORD_BOUND: i64 = 8;

fn power_table<G: GroupElement>(g: &G) -> Vec<G> {
    (-WORD_BOUND..=WORD_BOUND).map(|e| g.int_pow(e)).collect()
}

fn find_odd_word<G: GroupElement>(target: &G, gens: &[&Vec<G>]) -> Option<Vec<i64>> {
    let off = WORD_BOUND;
    let mut best: Option<Vec<i64>> = None;
    let mut consider = |expts: &[i64], prod: &G| {
        if prod != target {
            return;
        }
        if expts.iter().sum::<i64>().rem_euclid(2) != 1 {
            return;
        }
        let cost: i64 = expts.iter().map(|e| e.abs()).sum();
        match &best {
            Some(b) if b.iter().map(|e| e.abs()).sum::<i64>() <= cost => {}
            _ => best = Some(expts.to_vec()),
        }
    };
    match gens {
        [g1, g2] => {
            for r in -WORD_BOUND..=WORD_BOUND {
                for s in -WORD_BOUND..=WORD_BOUND {
                    if r.abs() + s.abs() > WORD_BOUND {
                        continue;
                    }
                    let prod = g1[(r + off) as usize].op(&g2[(s + off) as usize]);
                    consider(&[r, s], &prod);
                }
            }
        }
        [g1, g2, g3] => {
            for r in -WORD_BOUND..=WORD_BOUND {
                for s in -WORD_BOUND..=WORD_BOUND {
                    if r.abs() + s.abs() > WORD_BOUND {
                        continue;
                    }
                    let partial = g1[(r + off) as usize].op(&g2[(s + off) as usize]);
                    for t in -WORD_BOUND..=WORD_BOUND {
                        if r.abs() + s.abs() + t.abs() > WORD_BOUND {
                            continue;
                        }
                        let prod = partial.op(&g3[(t + off) as usize]);
                        consider(&[r, s, t], &prod);
                    }
                }
            }
        }
        _ => unreachable!("classes use two or three generators"),
    }
    best
}

/// Builds the twelve transporters of an `O^(2)` family with transporter
/// `g` and classifies every twist `g_{i▷j}^{-1} · a_i · g_j` as a word of
/// odd total exponent over the class-specific generators. Any twist that
/// cannot be so expressed is a defect.
pub fn octa_transporter_suite<G: GroupElement>(
    fam: &Octa2Family<G>,
) -> Result<TwistReport, FamilyError> {
    let g = fam.g.clone().ok_or(FamilyError::TransporterMissing)?;
    let s = |i: usize| fam.sigma.s(i);
    let t = |i: usize| fam.tau.s(i);
    let transporters: Vec<G> = vec![
        s(1).clone(),
        s(5).clone(),
        s(2).clone(),
        s(3).clone(),
        s(4).clone(),
        s(2).op(s(2)).op(s(1)),
        g.op(s(1)),
        t(5).op(&g),
        t(2).op(&g),
        t(3).op(&g),
        t(4).op(&g),
        t(2).op(t(2)).op(&g).op(s(1)),
    ];
    let table = octahedral_rack();
    for (idx, gj) in transporters.iter().enumerate() {
        let want = if idx < 6 { s(idx + 1) } else { t(idx - 5) };
        if gj.conj(s(1)) != *want {
            return Err(Defect {
                law: "octa2-transporters".into(),
                detail: format!("g_{} does not carry sigma_1 to its target", idx + 1),
            }
            .into());
        }
    }

    let gen_s1 = power_table(s(1));
    let gen_s6 = power_table(s(6));
    let gen_t1 = power_table(t(1));
    let conj_by_g = |x: &G| g.inverse().op(x).op(&g);
    let gen_gs1 = power_table(&conj_by_g(s(1)));
    let gen_gs6 = power_table(&conj_by_g(s(6)));
    let gen_gt6 = power_table(&conj_by_g(t(6)));

    let mut entries = Vec::with_capacity(144);
    for i in 0..12 {
        for j in 0..12 {
            let h = (j / 6) * 6 + octa(&table, i % 6, j % 6);
            let acting = if i < 6 { s(i + 1) } else { t(i - 5) };
            let twist = transporters[h]
                .inverse()
                .op(acting)
                .op(&transporters[j]);
            let (class, gens): (&'static str, Vec<&Vec<G>>) = match (i < 6, j < 6) {
                (true, true) => ("ss", vec![&gen_s1, &gen_s6]),
                (false, false) => ("tt", vec![&gen_s1, &gen_gt6]),
                (true, false) => ("st", vec![&gen_s1, &gen_gs1, &gen_gs6]),
                (false, true) => ("ts", vec![&gen_s1, &gen_t1, &gen_s6]),
            };
            match find_odd_word(&twist, &gens) {
                Some(exponents) => entries.push(TwistEntry {
                    i: i + 1,
                    j: j + 1,
                    class,
                    exponents,
                }),
                None => {
                    return Err(Defect {
                        law: "octa2-twist-parity".into(),
                        detail: format!(
                            "twist at (i,j) = ({},{}) admits no odd-parity factorization",
                            i + 1,
                            j + 1
                        ),
                    }
                    .into())
                }
            }
        }
    }
    Ok(TwistReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::CycleType;
    use crate::rack::{find_isomorphism, rack_from_elements, square_rack};

    fn pc(m: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(m, cycles).unwrap()
    }

    /// The six 4-cycles of S_4 in octahedral order.
    pub(crate) fn s4_sextuple() -> Vec<Permutation> {
        vec![
            pc(4, &[&[1, 2, 3, 4]]),
            pc(4, &[&[1, 2, 4, 3]]),
            pc(4, &[&[1, 3, 2, 4]]),
            pc(4, &[&[1, 3, 4, 2]]),
            pc(4, &[&[1, 4, 2, 3]]),
            pc(4, &[&[1, 4, 3, 2]]),
        ]
    }

    #[test]
    fn four_cycles_are_octahedral() {
        let fam = verify_octa(s4_sextuple()).unwrap();
        let c = octa_consequences(&fam).unwrap();
        assert!(c.fourth_power.is_identity());
        assert!(c.common_product.is_identity());
    }

    #[test]
    fn transpositions_are_not() {
        let members = vec![
            pc(6, &[&[1, 2]]),
            pc(6, &[&[1, 3]]),
            pc(6, &[&[1, 4]]),
            pc(6, &[&[1, 5]]),
            pc(6, &[&[1, 6]]),
            pc(6, &[&[2, 3]]),
        ];
        assert!(matches!(
            verify_octa(members).unwrap_err(),
            FamilyError::Relation { .. }
        ));
        let dup = vec![pc(4, &[&[1, 2, 3, 4]]); 6];
        assert!(matches!(
            verify_octa(dup).unwrap_err(),
            FamilyError::Duplicate { .. }
        ));
    }

    #[test]
    fn reduced_identities_match_full_verifier() {
        let fam = octa_from_reduced(s4_sextuple()).unwrap();
        assert_eq!(fam.members(), verify_octa(s4_sextuple()).unwrap().members());

        // violate 2▷3=6 by swapping members 5 and 6
        let mut bad = s4_sextuple();
        bad.swap(4, 5);
        match octa_from_reduced(bad).unwrap_err() {
            FamilyError::IdentityFailed(name) => assert_eq!(name, "1▷2=5"),
            e => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn eight_cycle_case_one() {
        let sigma = pc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]);
        let (fam, d, e) = sym_o2_8cycle(&sigma).unwrap();
        assert_eq!((d, e), (3, 5));
        assert_eq!(
            fam.sigma().s(2),
            &pc(8, &[&[1, 3, 8, 6, 5, 7, 4, 2]])
        );
        assert_eq!(fam.sigma().s(6), &sigma.power(3));
        assert_eq!(fam.tau().s(1), &sigma.power(5));
        assert_eq!(fam.tau().s(6), &sigma.inverse());

        let c = octa_consequences(fam.sigma()).unwrap();
        assert_eq!(c.fourth_power, sigma.power(4));
        assert!(!c.fourth_power.is_identity());
    }

    #[test]
    fn eight_cycle_with_transposition() {
        let sigma = pc(10, &[&[1, 2, 3, 4, 5, 6, 7, 8], &[9, 10]]);
        let (fam, _, _) = sym_o2_8cycle(&sigma).unwrap();
        for m in fam.all_members() {
            assert_eq!(m.cycle_type(), sigma.cycle_type());
        }
    }

    #[test]
    fn eight_cycle_case_two() {
        let sigma = pc(
            16,
            &[
                &[1, 2, 3, 4, 5, 6, 7, 8],
                &[9, 10, 11, 12, 13, 14, 15, 16],
            ],
        );
        let (fam, _, _) = sym_o2_8cycle(&sigma).unwrap();
        assert_eq!(fam.sigma().s(6), &sigma.power(3));
        assert_eq!(fam.all_members().count(), 12);
    }

    #[test]
    fn eight_cycle_rejects_wrong_types() {
        // a fixed point is allowed
        assert!(sym_o2_8cycle(&pc(9, &[&[1, 2, 3, 4, 5, 6, 7, 8]])).is_ok());
        // a 3-cycle alongside is not
        assert!(sym_o2_8cycle(&pc(11, &[&[1, 2, 3, 4, 5, 6, 7, 8], &[9, 10, 11]])).is_err());
        // n_8 = 3 redirects
        let sigma = pc(
            24,
            &[
                &[1, 2, 3, 4, 5, 6, 7, 8],
                &[9, 10, 11, 12, 13, 14, 15, 16],
                &[17, 18, 19, 20, 21, 22, 23, 24],
            ],
        );
        match sym_o2_8cycle(&sigma).unwrap_err() {
            FamilyError::Hypothesis(msg) => assert!(msg.contains("three-even-cycles")),
            e => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn octa2_members_form_octahedral_square() {
        let sigma = pc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]);
        let (fam, _, _) = sym_o2_8cycle(&sigma).unwrap();
        let members: Vec<Permutation> = fam.all_members().cloned().collect();
        let rack = rack_from_elements(&members).unwrap();
        assert_eq!(rack.check(), Ok(()));
        let target = square_rack(&octahedral_rack());
        let iso = find_isomorphism(&rack, &target).unwrap();
        assert!(iso.is_some());
    }

    #[test]
    fn transporter_suite_powers_case() {
        let sigma = pc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]);
        let (fam, _, _) = sym_o2_8cycle(&sigma).unwrap();
        let report = octa_transporter_suite(&fam).unwrap();
        assert_eq!(report.entries.len(), 144);
        for entry in &report.entries {
            let total: i64 = entry.exponents.iter().sum();
            assert_eq!(total.rem_euclid(2), 1, "twist ({},{})", entry.i, entry.j);
        }
        // every member is an odd power of sigma here, so every twist is too
        let sigma_powers: Vec<Permutation> =
            (0..8).map(|k| sigma.power(k)).collect();
        let g = fam.transporter().unwrap();
        let all_powers = |x: &Permutation| sigma_powers.contains(x);
        assert!(all_powers(&g.inverse().compose(&sigma).unwrap().compose(g).unwrap()));
    }

    #[test]
    fn cycle_type_guard() {
        let t = CycleType::parse(8, "8").unwrap();
        assert_eq!(t.multiplicity(8), 1);
        assert!(sym_o2_8cycle(&pc(7, &[&[1, 2, 3, 4, 5, 6, 7]])).is_err());
    }
}

//! Square commutativity: `(xy)² = (yx)²` for all `x, y`.
//!
//! Every "for all" check here is an exhaustive scan over the table and
//! returns the lexicographically least witness (by element id) when it
//! fails. Besides the definition itself this module covers the generator
//! criteria, the subgroup `Z²` of central involutions, the quotient
//! `Ĝ = G/Z²`, the `C_n · Z` coverage property, two-generator normal forms
//! and the auxiliary identities that hold in every square commutative group.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::group::{CayleyGroup, ElementId, GroupError, QuotientMap, SubgroupSet};

/// `c_set` refuses longer generator lists (it enumerates `2^n` products).
pub const MAX_C_SET_GENERATORS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SqCommError {
    #[error("the given elements do not generate the group")]
    NotGenerating,
    #[error("need at least 3 generators, got {0}")]
    TooFewGenerators(usize),
    #[error("generator list contains {0} twice")]
    DuplicateGenerator(ElementId),
    #[error("generator list of length {0} exceeds the limit of {MAX_C_SET_GENERATORS}")]
    GeneratorListTooLong(usize),
    #[error("{0} has no decomposition a^i b^j (ab)^(2l)")]
    NoDecomposition(ElementId),
    #[error("group is not square commutative: (xy)^2 != (yx)^2 for x = {}, y = {}", .0.0, .0.1)]
    NotSquareCommutative((ElementId, ElementId)),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn square(g: &CayleyGroup, x: ElementId) -> ElementId {
    g.mul(x, x)
}

fn pairs(g: &CayleyGroup) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
    g.elements().flat_map(move |x| g.elements().map(move |y| (x, y)))
}

fn require_generating(g: &CayleyGroup, gens: &[ElementId]) -> Result<(), SqCommError> {
    if g.generates(gens) {
        Ok(())
    } else {
        Err(SqCommError::NotGenerating)
    }
}

/// Least `(x, y)` with `(xy)² != (yx)²`.
pub fn square_commutativity_witness(g: &CayleyGroup) -> Option<(ElementId, ElementId)> {
    pairs(g).find(|&(x, y)| square(g, g.mul(x, y)) != square(g, g.mul(y, x)))
}

pub fn is_square_commutative(g: &CayleyGroup) -> bool {
    square_commutativity_witness(g).is_none()
}

/// Verdict for one named relation; failing relations carry the generator
/// tuple they failed on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationVerdict {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Vec<ElementId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub relations: Vec<RelationVerdict>,
    pub overall: bool,
}

impl CriterionReport {
    fn from_relations(relations: Vec<RelationVerdict>) -> Self {
        let overall = relations.iter().all(|r| r.holds);
        CriterionReport { relations, overall }
    }

    pub fn relation(&self, name: &str) -> Option<&RelationVerdict> {
        self.relations.iter().find(|r| r.name == name)
    }
}

fn verdict(name: &str, witness: Option<Vec<ElementId>>) -> RelationVerdict {
    RelationVerdict { name: name.into(), holds: witness.is_none(), witness }
}

pub const REL_B2A: &str = "b^2 a = a b^2";
pub const REL_A2B: &str = "a^2 b = b a^2";
pub const REL_ABAB: &str = "(a b)^2 = (b a)^2";

/// The three relations `b²a = ab²`, `a²b = ba²`, `(ab)² = (ba)²` on a
/// generating pair; together they are equivalent to square commutativity.
pub fn two_generator_criterion(g: &CayleyGroup, a: ElementId, b: ElementId) -> Result<CriterionReport, SqCommError> {
    require_generating(g, &[a, b])?;
    let fail = |ok: bool| (!ok).then(|| vec![a, b]);
    let ab = g.mul(a, b);
    let ba = g.mul(b, a);
    Ok(CriterionReport::from_relations(vec![
        verdict(REL_B2A, fail(g.commutes(square(g, b), a))),
        verdict(REL_A2B, fail(g.commutes(square(g, a), b))),
        verdict(REL_ABAB, fail(square(g, ab) == square(g, ba))),
    ]))
}

pub const REL_X1_X2SQ: &str = "x1 x2^2 = x2^2 x1";
pub const REL_X1_X2X3SQ: &str = "x1 (x2 x3)^2 = (x2 x3)^2 x1";
pub const REL_X1X2SQ: &str = "(x1 x2)^2 = (x2 x1)^2";

/// Relation family over ordered pairs and triples of distinct generators,
/// for generating sets of size at least three.
pub fn n_generator_criterion(g: &CayleyGroup, gens: &[ElementId]) -> Result<CriterionReport, SqCommError> {
    if gens.len() < 3 {
        return Err(SqCommError::TooFewGenerators(gens.len()));
    }
    for (i, &x) in gens.iter().enumerate() {
        if gens[..i].contains(&x) {
            return Err(SqCommError::DuplicateGenerator(x));
        }
    }
    require_generating(g, gens)?;

    let n = gens.len();
    let ordered_pairs = || (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
    let ordered_triples =
        || ordered_pairs().flat_map(move |(i, j)| (0..n).filter(move |&k| k != i && k != j).map(move |k| (i, j, k)));

    let first =
        ordered_pairs().find(|&(i, j)| !g.commutes(gens[i], square(g, gens[j]))).map(|(i, j)| vec![gens[i], gens[j]]);
    let second = ordered_triples()
        .find(|&(i, j, k)| !g.commutes(gens[i], square(g, g.mul(gens[j], gens[k]))))
        .map(|(i, j, k)| vec![gens[i], gens[j], gens[k]]);
    let third = ordered_pairs()
        .find(|&(i, j)| square(g, g.mul(gens[i], gens[j])) != square(g, g.mul(gens[j], gens[i])))
        .map(|(i, j)| vec![gens[i], gens[j]]);

    Ok(CriterionReport::from_relations(vec![
        verdict(REL_X1_X2SQ, first),
        verdict(REL_X1_X2X3SQ, second),
        verdict(REL_X1X2SQ, third),
    ]))
}

/// `Z²`: central elements with `d² = e`.
pub fn z2_subgroup(g: &CayleyGroup) -> SubgroupSet {
    let members: Vec<ElementId> = g.center().iter().filter(|&d| square(g, d) == g.identity()).collect();
    SubgroupSet::from_elements(g, &members).expect("central involutions form a subgroup")
}

/// `Ĝ = G / Z²`.
pub fn hat_group(g: &CayleyGroup) -> QuotientMap {
    g.quotient(&z2_subgroup(g)).expect("Z² is central, hence normal")
}

/// Least `(x, y)` with `x² y != y x²`.
pub fn squares_central_witness(g: &CayleyGroup) -> Option<(ElementId, ElementId)> {
    pairs(g).find(|&(x, y)| !g.commutes(square(g, x), y))
}

pub fn squares_central(g: &CayleyGroup) -> bool {
    squares_central_witness(g).is_none()
}

/// Identity followed by the products `a_{i1} ⋯ a_{ij}` over every strictly
/// increasing index sequence, in subset-bitmask order (`2^n` entries).
pub fn c_set_products(g: &CayleyGroup, gens: &[ElementId]) -> Result<Vec<ElementId>, SqCommError> {
    if gens.len() > MAX_C_SET_GENERATORS {
        return Err(SqCommError::GeneratorListTooLong(gens.len()));
    }
    Ok((0u32..1 << gens.len())
        .map(|mask| {
            gens.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(g.identity(), |acc, (_, &x)| g.mul(acc, x))
        })
        .collect())
}

/// `C_n`, sorted and deduplicated.
pub fn c_set(g: &CayleyGroup, gens: &[ElementId]) -> Result<Vec<ElementId>, SqCommError> {
    let mut set = c_set_products(g, gens)?;
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// Whether `C_n · Z = G`.
pub fn coverage_check(g: &CayleyGroup, gens: &[ElementId]) -> Result<bool, SqCommError> {
    require_generating(g, gens)?;
    let c = c_set(g, gens)?;
    let center = g.center();
    Ok(g.product_set(&c, center.members()).len() == g.order())
}

/// Exponents of `x = a^h_a · b^h_b · (ab)^(2λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalForm2 {
    pub h_a: usize,
    pub h_b: usize,
    pub lambda: u8,
}

impl NormalForm2 {
    pub fn evaluate(&self, g: &CayleyGroup, a: ElementId, b: ElementId) -> ElementId {
        let ab_sq = square(g, g.mul(a, b));
        let head = g.mul(g.pow(a, self.h_a as i64), g.pow(b, self.h_b as i64));
        g.mul(head, g.pow(ab_sq, i64::from(self.lambda)))
    }
}

/// Lexicographically least `(h_a, h_b, λ)` with `h_a < ord(a)`,
/// `h_b < ord(b)`, `λ ∈ {0, 1}` decomposing `x`.
pub fn normal_form_two_gen(
    g: &CayleyGroup,
    a: ElementId,
    b: ElementId,
    x: ElementId,
) -> Result<NormalForm2, SqCommError> {
    require_generating(g, &[a, b])?;
    let ab_sq = square(g, g.mul(a, b));
    let tail = [g.identity(), ab_sq];
    let mut a_pow = g.identity();
    for h_a in 0..g.element_order(a) {
        let mut head = a_pow;
        for h_b in 0..g.element_order(b) {
            for (lambda, &t) in tail.iter().enumerate() {
                if g.mul(head, t) == x {
                    return Ok(NormalForm2 { h_a, h_b, lambda: lambda as u8 });
                }
            }
            head = g.mul(head, b);
        }
        a_pow = g.mul(a_pow, a);
    }
    Err(SqCommError::NoDecomposition(x))
}

/// The `d ∈ Z²` with `xy = yx·d`, if there is one (it is unique).
pub fn sim_witness(g: &CayleyGroup, x: ElementId, y: ElementId) -> Option<ElementId> {
    let d = g.mul(g.inv(g.mul(y, x)), g.mul(x, y));
    z2_subgroup(g).contains(d).then_some(d)
}

/// Same as [`sim_witness`] for every pair at once, reusing one `Z²`.
/// Returns the least pair with no witness.
pub fn sim_failure(g: &CayleyGroup) -> Option<(ElementId, ElementId)> {
    let z2 = z2_subgroup(g);
    pairs(g).find(|&(x, y)| !z2.contains(g.mul(g.inv(g.mul(y, x)), g.mul(x, y))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SandwichCounterexample {
    pub x: ElementId,
    pub y: ElementId,
    pub m: i64,
    pub n: i64,
}

/// Checks `(xyx)^m y^n = y^n (xyx)^m` for all pairs and exponents in range.
pub fn sandwich_check(
    g: &CayleyGroup,
    m_range: RangeInclusive<i64>,
    n_range: RangeInclusive<i64>,
) -> Result<Option<SandwichCounterexample>, SqCommError> {
    if let Some(w) = square_commutativity_witness(g) {
        return Err(SqCommError::NotSquareCommutative(w));
    }
    for (x, y) in pairs(g) {
        let xyx = g.mul(g.mul(x, y), x);
        for m in m_range.clone() {
            let left = g.pow(xyx, m);
            for n in n_range.clone() {
                let right = g.pow(y, n);
                if !g.commutes(left, right) {
                    return Ok(Some(SandwichCounterexample { x, y, m, n }));
                }
            }
        }
    }
    Ok(None)
}

/// Least `(x, y)` with `(xy)^4 != x^4 y^4`.
pub fn fourth_power_check(g: &CayleyGroup) -> Option<(ElementId, ElementId)> {
    pairs(g).find(|&(x, y)| g.pow(g.mul(x, y), 4) != g.mul(g.pow(x, 4), g.pow(y, 4)))
}

/// A generator sequence whose product changes by something outside `Z²`
/// when the letters at `position` and `position + 1` are swapped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReorderCounterexample {
    pub sequence: Vec<ElementId>,
    pub position: usize,
}

/// For every generator sequence of length `2..=max_len` and every adjacent
/// transposition, the two products differ by an element of `Z²`. Adjacent
/// transpositions generate the symmetric group, so this covers every
/// reordering.
pub fn reorder_defect_check(
    g: &CayleyGroup,
    gens: &[ElementId],
    max_len: usize,
) -> Result<Option<ReorderCounterexample>, SqCommError> {
    require_generating(g, gens)?;
    let z2 = z2_subgroup(g);
    let product = |seq: &[ElementId]| seq.iter().fold(g.identity(), |acc, &x| g.mul(acc, x));
    for len in 2..=max_len {
        if gens.is_empty() {
            break;
        }
        let mut digits = vec![0usize; len];
        loop {
            let mut seq: Vec<ElementId> = digits.iter().map(|&d| gens[d]).collect();
            let original = product(&seq);
            for position in 0..len - 1 {
                seq.swap(position, position + 1);
                let swapped = product(&seq);
                seq.swap(position, position + 1);
                if !z2.contains(g.mul(g.inv(original), swapped)) {
                    return Ok(Some(ReorderCounterexample { sequence: seq, position }));
                }
            }
            if !advance(&mut digits, gens.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Odometer increment, most significant digit first; false on wraparound.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Whether `G / Z` is abelian.
pub fn g_mod_center_abelian(g: &CayleyGroup) -> bool {
    g.quotient(&g.center()).expect("the center is normal").quotient().is_abelian()
}

/// For each of `a`, `b`, `ab`: the least even `p ≤ ord` whose power is not
/// central. Only meaningful when the three two-generator relations hold.
pub fn even_powers_central(g: &CayleyGroup, a: ElementId, b: ElementId) -> Option<(ElementId, i64)> {
    let center = g.center();
    [a, b, g.mul(a, b)].into_iter().find_map(|x| {
        let ord = g.element_order(x) as i64;
        (2..=ord.max(2)).step_by(2).find(|&p| !center.contains(g.pow(x, p))).map(|p| (x, p))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerExchangeCounterexample {
    pub x: ElementId,
    pub y: ElementId,
    pub p: i64,
    pub q: i64,
}

/// In a square commutative group, `x^p y = y x^q` forces `x^(2(p-q)) = e`
/// when `p` and `q` are both odd and `x^(p-q) = e` otherwise. Checks that
/// consequence for all pairs and `1 ≤ p, q ≤ max_exponent`.
pub fn power_exchange_check(g: &CayleyGroup, max_exponent: i64) -> Option<PowerExchangeCounterexample> {
    for (x, y) in pairs(g) {
        for p in 1..=max_exponent {
            let left = g.mul(g.pow(x, p), y);
            for q in 1..=max_exponent {
                if left != g.mul(y, g.pow(x, q)) {
                    continue;
                }
                let k = if p % 2 == 1 && q % 2 == 1 { 2 * (p - q) } else { p - q };
                if g.pow(x, k) != g.identity() {
                    return Some(PowerExchangeCounterexample { x, y, p, q });
                }
            }
        }
    }
    None
}

/// The full square commutativity audit of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub order: usize,
    pub is_square_commutative: bool,
    pub witness: Option<(ElementId, ElementId)>,
    pub center_size: usize,
    pub z2_size: usize,
    pub hat_order: usize,
    pub hat_abelian: bool,
    pub squares_central: bool,
    pub g_mod_z_abelian: bool,
    pub criteria: Option<CriterionReport>,
    pub coverage_ok: Option<bool>,
    /// Square commutativity, `Ĝ` abelian, squares central and (when
    /// computed) the generator criterion all agree.
    pub consistent: bool,
}

/// Runs every check; `gens` (if given) must generate and selects the
/// two-generator (size 2) or n-generator (size ≥ 3) criterion.
pub fn analyze(g: &CayleyGroup, gens: Option<&[ElementId]>) -> Result<AnalysisReport, SqCommError> {
    if let Some(gens) = gens {
        require_generating(g, gens)?;
    }
    let witness = square_commutativity_witness(g);
    let is_sq = witness.is_none();
    let z2 = z2_subgroup(g);
    let hat = g.quotient(&z2)?;
    let hat_abelian = hat.quotient().is_abelian();
    let squares_central = squares_central(g);

    let criteria = match gens {
        Some(&[a, b]) => Some(two_generator_criterion(g, a, b)?),
        Some(gs) if gs.len() >= 3 => Some(n_generator_criterion(g, gs)?),
        _ => None,
    };
    let coverage_ok = gens.map(|gs| coverage_check(g, gs)).transpose()?;

    let consistent =
        is_sq == hat_abelian && is_sq == squares_central && criteria.as_ref().is_none_or(|c| c.overall == is_sq);

    Ok(AnalysisReport {
        order: g.order(),
        is_square_commutative: is_sq,
        witness,
        center_size: g.center().len(),
        z2_size: z2.len(),
        hat_order: hat.quotient().order(),
        hat_abelian,
        squares_central,
        g_mod_z_abelian: g_mod_center_abelian(g),
        criteria,
        coverage_ok,
        consistent,
    })
}

/// A biconditional evaluated on one group. When `applies` is false the
/// hypothesis failed and the comparison is vacuous.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Biconditional {
    pub applies: bool,
    pub left: bool,
    pub right: bool,
}

impl Biconditional {
    pub fn holds(&self) -> bool {
        !self.applies || self.left == self.right
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionalChecks {
    /// square commutative ⇔ (G/Z abelian ∧ (ab)² = (ba)²)
    pub center_quotient_and_square: Biconditional,
    /// given a²b = ba²: square commutative ⇔ G/Z abelian
    pub commuting_square_case: Biconditional,
    /// given ord(a) or ord(b) odd: square commutative ⇔ abelian
    pub odd_order_case: Biconditional,
}

impl ConditionalChecks {
    pub fn all_hold(&self) -> bool {
        self.center_quotient_and_square.holds() && self.commuting_square_case.holds() && self.odd_order_case.holds()
    }
}

pub fn conditional_equivalence_checks(
    g: &CayleyGroup,
    a: ElementId,
    b: ElementId,
) -> Result<ConditionalChecks, SqCommError> {
    require_generating(g, &[a, b])?;
    let is_sq = is_square_commutative(g);
    let mod_center = g_mod_center_abelian(g);
    let ab_square = square(g, g.mul(a, b)) == square(g, g.mul(b, a));
    let odd = g.element_order(a) % 2 == 1 || g.element_order(b) % 2 == 1;
    Ok(ConditionalChecks {
        center_quotient_and_square: Biconditional { applies: true, left: is_sq, right: mod_center && ab_square },
        commuting_square_case: Biconditional { applies: g.commutes(square(g, a), b), left: is_sq, right: mod_center },
        odd_order_case: Biconditional { applies: odd, left: is_sq, right: g.is_abelian() },
    })
}

//! Dense Cayley-table groups.
//!
//! A [`CayleyGroup`] is validated exhaustively when it is built and is
//! immutable afterwards, so every downstream scan can trust the table.
//! Element ids handed to the accessor methods must belong to the group;
//! out-of-range ids panic on the table lookup.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Orders above this use Light's test over the generators instead of the
/// full triple scan when the generators allow it.
const FULL_ASSOCIATIVITY_SCAN_LIMIT: usize = 512;

/// Largest order accepted by [`are_isomorphic`].
pub const ISOMORPHISM_ORDER_LIMIT: usize = 512;

/// Index of an element inside its owning group's table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u32);

impl ElementId {
    pub const fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// The group axiom a table violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Closure,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("multiplication table is empty")]
    EmptyTable,
    #[error("multiplication table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    /// `witness` holds the offending element indices: `[x, y]` for closure,
    /// `[x]` for inverse, `[x, y, z]` for associativity, empty for identity.
    #[error("not a group: {axiom} fails at {witness:?}")]
    NotAGroup { axiom: Axiom, witness: Vec<usize> },
    #[error("bad labels: {0}")]
    BadLabels(String),
    #[error("generator index {0} is out of range")]
    GeneratorOutOfRange(usize),
    #[error("generators produce {generated} of {order} elements")]
    GeneratorsDoNotGenerate { generated: usize, order: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal: {by}^-1 {member} {by} leaves it")]
    NotNormal { member: ElementId, by: ElementId },
    #[error("isomorphism search is limited to order {limit}, got {order}")]
    OrderLimitExceeded { order: usize, limit: usize },
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGroup {
    order: usize,
    mul: Vec<ElementId>,
    inv: Vec<ElementId>,
    identity: ElementId,
    labels: Vec<String>,
    generators: Vec<ElementId>,
}

impl CayleyGroup {
    /// Builds and validates a group from a row-major table where
    /// `table[x][y]` is the index of `x·y`.
    pub fn from_table(
        table: &[Vec<usize>],
        labels: Vec<String>,
        generators: Vec<ElementId>,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::EmptyTable);
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NotSquare { row, len: entries.len(), order });
            }
            for (col, &entry) in entries.iter().enumerate() {
                if entry >= order {
                    return Err(GroupError::NotAGroup { axiom: Axiom::Closure, witness: vec![row, col] });
                }
                flat.push(ElementId::new(entry));
            }
        }
        Self::from_flat(order, flat, labels, generators)
    }

    /// Same as [`from_table`](Self::from_table) for an already flattened,
    /// in-range table.
    pub(crate) fn from_flat(
        order: usize,
        mul: Vec<ElementId>,
        labels: Vec<String>,
        generators: Vec<ElementId>,
    ) -> Result<Self, GroupError> {
        debug_assert_eq!(mul.len(), order * order);
        check_labels(order, &labels)?;
        let at = |x: usize, y: usize| mul[x * order + y].index();

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NotAGroup { axiom: Axiom::Identity, witness: Vec::new() })?;

        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or(GroupError::NotAGroup { axiom: Axiom::Inverse, witness: vec![x] })?;
            inv.push(ElementId::new(y));
        }

        if let Some(g) = generators.iter().find(|g| g.index() >= order) {
            return Err(GroupError::GeneratorOutOfRange(g.index()));
        }

        let group = CayleyGroup { order, mul, inv, identity: ElementId::new(identity), labels, generators };
        group.check_associativity()?;

        if !group.generators.is_empty() {
            let generated = group.subgroup_generated(&group.generators).len();
            if generated != order {
                return Err(GroupError::GeneratorsDoNotGenerate { generated, order });
            }
        }
        Ok(group)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        if self.order > FULL_ASSOCIATIVITY_SCAN_LIMIT && self.left_normed_products_cover() {
            // Elements a with (xa)z = x(az) for all x, z are closed under
            // multiplication, so checking the generators is exact.
            let clean = self.generators.iter().all(|&g| {
                self.elements().all(|x| {
                    let xg = self.mul(x, g);
                    self.elements().all(|z| self.mul(xg, z) == self.mul(x, self.mul(g, z)))
                })
            });
            if clean {
                return Ok(());
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.mul(x, y);
                for z in self.elements() {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(GroupError::NotAGroup {
                            axiom: Axiom::Associativity,
                            witness: vec![x.index(), y.index(), z.index()],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether right-multiplying by generators, starting from the generators,
    /// reaches every element without assuming associativity.
    fn left_normed_products_cover(&self) -> bool {
        if self.generators.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.order];
        let mut queue: VecDeque<ElementId> = VecDeque::new();
        for &g in &self.generators {
            if !seen[g.index()] {
                seen[g.index()] = true;
                queue.push_back(g);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in &self.generators {
                let y = self.mul(x, g);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x.index()]
    }

    pub fn element_by_label(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label).map(ElementId::new)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order).map(ElementId::new)
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul[x.index() * self.order + y.index()]
    }

    #[inline]
    pub fn inv(&self, x: ElementId) -> ElementId {
        self.inv[x.index()]
    }

    /// `x^k` by square-and-multiply; negative exponents use the inverse.
    pub fn pow(&self, x: ElementId, k: i64) -> ElementId {
        let mut base = if k < 0 { self.inv(x) } else { x };
        let mut exp = k.unsigned_abs();
        let mut acc = self.identity;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: ElementId) -> usize {
        let mut acc = x;
        let mut m = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            m += 1;
        }
        m
    }

    /// Conjugation `y^-1 · x · y`.
    pub fn conjugate(&self, x: ElementId, by: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(by), x), by)
    }

    pub fn commutes(&self, x: ElementId, y: ElementId) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn center(&self) -> SubgroupSet {
        let members = self.elements().filter(|&z| self.elements().all(|x| self.commutes(z, x))).collect();
        SubgroupSet { members }
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_generated(&self, seed: &[ElementId]) -> SubgroupSet {
        let mut steps: Vec<ElementId> = Vec::with_capacity(seed.len() * 2);
        for &s in seed {
            steps.push(s);
            steps.push(self.inv(s));
        }
        let mut seen = vec![false; self.order];
        seen[self.identity.index()] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in &steps {
                let y = self.mul(x, s);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    queue.push_back(y);
                }
            }
        }
        SubgroupSet::from_mask(&seen)
    }

    pub fn generates(&self, gens: &[ElementId]) -> bool {
        self.subgroup_generated(gens).len() == self.order
    }

    /// Lexicographically least pair `(x, y)` with `xy != yx`.
    pub fn noncommuting_pair(&self) -> Option<(ElementId, ElementId)> {
        self.elements().flat_map(|x| self.elements().map(move |y| (x, y))).find(|&(x, y)| !self.commutes(x, y))
    }

    pub fn is_abelian(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    /// Lexicographically least `(h, g)` with `g^-1 h g` outside `h_set`.
    pub fn normality_witness(&self, h_set: &SubgroupSet) -> Option<(ElementId, ElementId)> {
        h_set
            .iter()
            .flat_map(|h| self.elements().map(move |g| (h, g)))
            .find(|&(h, g)| !h_set.contains(self.conjugate(h, g)))
    }

    pub fn is_normal(&self, h_set: &SubgroupSet) -> bool {
        self.normality_witness(h_set).is_none()
    }

    /// The quotient by a normal subgroup. Cosets are numbered by their
    /// least-index representative and labelled `<rep>·N`.
    pub fn quotient(&self, kernel: &SubgroupSet) -> Result<QuotientMap, GroupError> {
        if kernel.members.last().is_some_and(|m| m.index() >= self.order) {
            return Err(GroupError::NotASubgroup);
        }
        if let Some((member, by)) = self.normality_witness(kernel) {
            return Err(GroupError::NotNormal { member, by });
        }
        let unassigned = u32::MAX;
        let mut projection = vec![ElementId(unassigned); self.order];
        let mut reps: Vec<ElementId> = Vec::new();
        for x in self.elements() {
            if projection[x.index()].0 != unassigned {
                continue;
            }
            let coset = ElementId::new(reps.len());
            for n in kernel.iter() {
                projection[self.mul(x, n).index()] = coset;
            }
            reps.push(x);
        }
        let q = reps.len();
        let mut mul = Vec::with_capacity(q * q);
        for &r in &reps {
            for &s in &reps {
                mul.push(projection[self.mul(r, s).index()]);
            }
        }
        let labels = reps.iter().map(|&r| format!("{}·N", self.label(r))).collect();
        let mut generators: Vec<ElementId> = Vec::new();
        for &g in &self.generators {
            let image = projection[g.index()];
            if !generators.contains(&image) {
                generators.push(image);
            }
        }
        let quotient = CayleyGroup::from_flat(q, mul, labels, generators)?;
        Ok(QuotientMap { kernel: kernel.clone(), quotient, projection })
    }

    /// Componentwise product; element `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(&self, other: &CayleyGroup) -> CayleyGroup {
        let (m, n) = (self.order, other.order);
        let order = m * n;
        let pair = |g: ElementId, h: ElementId| ElementId::new(g.index() * n + h.index());
        let mut mul = Vec::with_capacity(order * order);
        for g1 in self.elements() {
            for h1 in other.elements() {
                for g2 in self.elements() {
                    for h2 in other.elements() {
                        mul.push(pair(self.mul(g1, g2), other.mul(h1, h2)));
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for g in self.elements() {
            for h in other.elements() {
                labels.push(format!("({},{})", self.label(g), other.label(h)));
            }
        }
        let incomplete = |grp: &CayleyGroup| grp.order > 1 && grp.generators.is_empty();
        let generators = if incomplete(self) || incomplete(other) {
            Vec::new()
        } else {
            self.generators
                .iter()
                .map(|&g| pair(g, other.identity))
                .chain(other.generators.iter().map(|&h| pair(self.identity, h)))
                .collect()
        };
        CayleyGroup::from_flat(order, mul, labels, generators).expect("direct product of groups is a group")
    }

    /// `X·Y`, sorted and deduplicated.
    pub fn product_set(&self, xs: &[ElementId], ys: &[ElementId]) -> Vec<ElementId> {
        let mut hit = vec![false; self.order];
        for &x in xs {
            for &y in ys {
                hit[self.mul(x, y).index()] = true;
            }
        }
        mask_to_ids(&hit)
    }

    /// `G^[2] = {x² : x ∈ G}`, sorted.
    pub fn squares_set(&self) -> Vec<ElementId> {
        let mut hit = vec![false; self.order];
        for x in self.elements() {
            hit[self.mul(x, x).index()] = true;
        }
        mask_to_ids(&hit)
    }

    /// Element orders in index order.
    pub fn order_profile(&self) -> Vec<usize> {
        self.elements().map(|x| self.element_order(x)).collect()
    }

    /// Greedy small generating set: repeatedly adds the highest-order
    /// element not yet in the generated subgroup (ties by least index).
    pub fn small_generating_set(&self) -> Vec<ElementId> {
        let orders = self.order_profile();
        let mut by_order: Vec<ElementId> = self.elements().collect();
        by_order.sort_by(|a, b| orders[b.index()].cmp(&orders[a.index()]).then(a.cmp(b)));
        let mut gens = Vec::new();
        let mut current = self.subgroup_generated(&gens);
        for x in by_order {
            if current.len() == self.order {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.subgroup_generated(&gens);
            }
        }
        gens
    }
}

fn check_labels(order: usize, labels: &[String]) -> Result<(), GroupError> {
    if labels.len() != order {
        return Err(GroupError::BadLabels(format!("{} labels for {order} elements", labels.len())));
    }
    if let Some(bad) = labels.iter().find(|l| l.is_empty() || l.chars().any(char::is_whitespace)) {
        return Err(GroupError::BadLabels(format!("label {bad:?} is empty or contains whitespace")));
    }
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(GroupError::BadLabels(format!("duplicate label {:?}", w[0])));
    }
    Ok(())
}

fn mask_to_ids(mask: &[bool]) -> Vec<ElementId> {
    mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| ElementId::new(i)).collect()
}

/// A subgroup, as a strictly sorted list of member ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSet {
    members: Vec<ElementId>,
}

impl SubgroupSet {
    /// Validates that `elements` form a subgroup of `group`.
    pub fn from_elements(group: &CayleyGroup, elements: &[ElementId]) -> Result<Self, GroupError> {
        if elements.iter().any(|e| e.index() >= group.order()) {
            return Err(GroupError::NotASubgroup);
        }
        let mut mask = vec![false; group.order()];
        for &e in elements {
            mask[e.index()] = true;
        }
        let set = SubgroupSet::from_mask(&mask);
        let closed = set.contains(group.identity())
            && set.iter().all(|x| set.contains(group.inv(x)) && set.iter().all(|y| set.contains(group.mul(x, y))));
        if closed {
            Ok(set)
        } else {
            Err(GroupError::NotASubgroup)
        }
    }

    fn from_mask(mask: &[bool]) -> Self {
        SubgroupSet { members: mask_to_ids(mask) }
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + Clone + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// A quotient `G/N` together with its projection.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    kernel: SubgroupSet,
    quotient: CayleyGroup,
    projection: Vec<ElementId>,
}

impl QuotientMap {
    pub fn kernel(&self) -> &SubgroupSet {
        &self.kernel
    }

    pub fn quotient(&self) -> &CayleyGroup {
        &self.quotient
    }

    pub fn into_quotient(self) -> CayleyGroup {
        self.quotient
    }

    pub fn project(&self, x: ElementId) -> ElementId {
        self.projection[x.index()]
    }

    pub fn projection(&self) -> &[ElementId] {
        &self.projection
    }
}

/// An explicit isomorphism, stored as the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    map: Vec<ElementId>,
}

impl Isomorphism {
    pub fn image(&self, x: ElementId) -> ElementId {
        self.map[x.index()]
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    /// Full check: bijective and `φ(xy) = φ(x)φ(y)` for every pair.
    pub fn is_valid(&self, source: &CayleyGroup, target: &CayleyGroup) -> bool {
        if self.map.len() != source.order() || source.order() != target.order() {
            return false;
        }
        let mut hit = vec![false; target.order()];
        for &y in &self.map {
            if y.index() >= target.order() || hit[y.index()] {
                return false;
            }
            hit[y.index()] = true;
        }
        source.elements().all(|x| {
            source.elements().all(|y| self.image(source.mul(x, y)) == target.mul(self.image(x), self.image(y)))
        })
    }
}

/// Backtracking isomorphism search.
///
/// Images of a small generating set of `g` are chosen among elements of `h`
/// with the same order; each partial choice is extended along the Cayley
/// graph of the generators chosen so far and rejected on the first
/// inconsistent edge.
pub fn are_isomorphic(g: &CayleyGroup, h: &CayleyGroup) -> Result<Option<Isomorphism>, GroupError> {
    for grp in [g, h] {
        if grp.order() > ISOMORPHISM_ORDER_LIMIT {
            return Err(GroupError::OrderLimitExceeded { order: grp.order(), limit: ISOMORPHISM_ORDER_LIMIT });
        }
    }
    if g.order() != h.order() {
        return Ok(None);
    }
    let g_orders = g.order_profile();
    let h_orders = h.order_profile();
    let mut gs = g_orders.clone();
    let mut hs = h_orders.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs || g.is_abelian() != h.is_abelian() {
        return Ok(None);
    }

    let gens = g.small_generating_set();
    let candidates: Vec<Vec<ElementId>> =
        gens.iter().map(|&x| h.elements().filter(|&y| h_orders[y.index()] == g_orders[x.index()]).collect()).collect();
    let mut images = Vec::with_capacity(gens.len());
    let found = search(g, h, &gens, &candidates, &mut images);
    Ok(found.inspect(|iso| debug_assert!(iso.is_valid(g, h))))
}

fn search(
    g: &CayleyGroup,
    h: &CayleyGroup,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    images: &mut Vec<ElementId>,
) -> Option<Isomorphism> {
    let depth = images.len();
    if depth > 0 {
        let partial = extend_partial(g, h, &gens[..depth], images)?;
        if depth == gens.len() {
            return Some(Isomorphism { map: partial.into_iter().map(|y| y.expect("total")).collect() });
        }
    } else if gens.is_empty() {
        // trivial groups
        return Some(Isomorphism { map: vec![h.identity(); g.order()] });
    }
    for &c in &candidates[depth] {
        images.push(c);
        if let Some(iso) = search(g, h, gens, candidates, images) {
            return Some(iso);
        }
        images.pop();
    }
    None
}

/// Extends the generator assignment to `⟨gens⟩` by breadth-first search,
/// failing on any non-homomorphic edge or collision.
fn extend_partial(
    g: &CayleyGroup,
    h: &CayleyGroup,
    gens: &[ElementId],
    images: &[ElementId],
) -> Option<Vec<Option<ElementId>>> {
    let mut map: Vec<Option<ElementId>> = vec![None; g.order()];
    let mut used = vec![false; h.order()];
    map[g.identity().index()] = Some(h.identity());
    used[h.identity().index()] = true;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x.index()].expect("queued elements are mapped");
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(fx, t);
            match map[y.index()] {
                Some(existing) if existing != fy => return None,
                Some(_) => {}
                None => {
                    if used[fy.index()] {
                        return None;
                    }
                    used[fy.index()] = true;
                    map[y.index()] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

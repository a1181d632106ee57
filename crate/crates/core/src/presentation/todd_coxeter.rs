//! HLT coset enumeration over the trivial subgroup.
//!
//! Column `2g` of the coset table is generator `g`, column `2g + 1` its
//! inverse. New cosets are numbered in order of definition; coincidences
//! are processed through a queue that always merges the larger coset into
//! the smaller one, so the result is fully deterministic.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Presentation, Word};
use crate::group::{CayleyGroup, ElementId, GroupError};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

const UNDEFINED: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("coset limit of {limit} exceeded (group may be infinite or larger than the limit)")]
    CosetLimitExceeded { limit: usize },
    #[error("presentation has no generators")]
    EmptyGeneratorList,
    #[error("realized table failed validation: {0}")]
    Group(#[from] GroupError),
}

/// A finite presented group as a Cayley table, with the image of each
/// presentation generator.
#[derive(Clone, Debug)]
pub struct Realization {
    pub group: CayleyGroup,
    pub assignment: Vec<ElementId>,
}

impl Realization {
    pub fn evaluate(&self, word: &Word) -> ElementId {
        word.evaluate(&self.group, &self.assignment)
    }

    /// Every relator is trivial and the assignment generates the group.
    pub fn satisfies(&self, presentation: &Presentation) -> bool {
        presentation.relators().iter().all(|r| self.evaluate(r) == self.group.identity())
            && self.group.generates(&self.assignment)
    }
}

struct CosetTable {
    columns: usize,
    rows: Vec<usize>,
    parent: Vec<usize>,
    limit: usize,
}

impl CosetTable {
    fn new(generators: usize, limit: usize) -> Self {
        let columns = 2 * generators;
        CosetTable { columns, rows: vec![UNDEFINED; columns], parent: vec![0], limit }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, coset: usize, col: usize) -> usize {
        self.rows[coset * self.columns + col]
    }

    #[inline]
    fn set(&mut self, coset: usize, col: usize, value: usize) {
        self.rows[coset * self.columns + col] = value;
    }

    fn is_live(&self, coset: usize) -> bool {
        self.parent[coset] == coset
    }

    fn define(&mut self, coset: usize, col: usize) -> Result<(), EnumerationError> {
        if self.len() >= self.limit {
            return Err(EnumerationError::CosetLimitExceeded { limit: self.limit });
        }
        let new = self.len();
        self.parent.push(new);
        self.rows.extend(core::iter::repeat_n(UNDEFINED, self.columns));
        self.set(coset, col, new);
        self.set(new, col ^ 1, coset);
        Ok(())
    }

    fn rep(&mut self, coset: usize) -> usize {
        let mut root = coset;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut c = coset;
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop] = keep;
            queue.push_back(drop);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for col in 0..self.columns {
                let target = self.get(dead, col);
                if target == UNDEFINED {
                    continue;
                }
                self.set(target, col ^ 1, UNDEFINED);
                let mu = self.rep(dead);
                let nu = self.rep(target);
                let mu_image = self.get(mu, col);
                let nu_back = self.get(nu, col ^ 1);
                if mu_image != UNDEFINED {
                    self.merge(nu, mu_image, &mut queue);
                } else if nu_back != UNDEFINED {
                    self.merge(mu, nu_back, &mut queue);
                } else {
                    self.set(mu, col, nu);
                    self.set(nu, col ^ 1, mu);
                }
            }
        }
    }

    /// Scans `relator` from both ends at `coset`, defining new cosets until
    /// the scan closes, then records the deduction or coincidence.
    fn scan_and_fill(&mut self, coset: usize, relator: &[usize]) -> Result<(), EnumerationError> {
        if relator.is_empty() {
            return Ok(());
        }
        let letter = |k: isize| relator[k as usize];
        let mut f = coset;
        let mut b = coset;
        let mut i: isize = 0;
        let mut j: isize = relator.len() as isize - 1;
        loop {
            while i <= j && self.get(f, letter(i)) != UNDEFINED {
                f = self.get(f, letter(i));
                i += 1;
            }
            if i > j {
                if f != coset {
                    self.coincidence(f, coset);
                }
                return Ok(());
            }
            while j >= i && self.get(b, letter(j) ^ 1) != UNDEFINED {
                b = self.get(b, letter(j) ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.set(f, letter(i), b);
                self.set(b, letter(i) ^ 1, f);
                return Ok(());
            }
            self.define(f, letter(i))?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup and closes the resulting
/// generator permutations into a Cayley table.
///
/// `max_cosets` bounds the number of coset rows ever defined.
pub fn todd_coxeter(presentation: &Presentation, max_cosets: usize) -> Result<Realization, EnumerationError> {
    let gens = presentation.generators().len();
    if gens == 0 {
        return Err(EnumerationError::EmptyGeneratorList);
    }
    let relators: Vec<Vec<usize>> = presentation
        .relators()
        .iter()
        .map(|r| r.letters().map(|(g, inverted)| 2 * g + usize::from(inverted)).collect())
        .collect();

    let mut table = CosetTable::new(gens, max_cosets.max(1));
    let mut coset = 0;
    while coset < table.len() {
        if table.is_live(coset) {
            for relator in &relators {
                table.scan_and_fill(coset, relator)?;
                if !table.is_live(coset) {
                    break;
                }
            }
            if table.is_live(coset) {
                for col in 0..table.columns {
                    if table.get(coset, col) == UNDEFINED {
                        table.define(coset, col)?;
                    }
                }
            }
        }
        coset += 1;
    }

    let live: Vec<usize> = (0..table.len()).filter(|&c| table.is_live(c)).collect();
    let mut renumber = vec![UNDEFINED; table.len()];
    for (new, &old) in live.iter().enumerate() {
        renumber[old] = new;
    }
    let permutations: Vec<Vec<u32>> = (0..gens)
        .map(|g| {
            live.iter()
                .map(|&c| {
                    let image = table.get(c, 2 * g);
                    let image = table.rep(image);
                    renumber[image] as u32
                })
                .collect()
        })
        .collect();
    Ok(close_permutations(&permutations, presentation.generators())?)
}

/// Closes generator permutations (acting on the right) under composition
/// and builds the Cayley table. Elements are numbered in breadth-first
/// order from the identity and labelled by their discovering word.
fn close_permutations(perms: &[Vec<u32>], names: &[String]) -> Result<Realization, GroupError> {
    let degree = perms[0].len();
    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut elements: Vec<Vec<u32>> = Vec::new();
    let mut words: Vec<Vec<(usize, i64)>> = Vec::new();
    // parent[x] = (y, g) with x = y·g
    let mut parent: Vec<(usize, usize)> = Vec::new();
    let mut right: Vec<Vec<usize>> = Vec::new();

    index.insert(identity.clone(), 0);
    elements.push(identity);
    words.push(Vec::new());
    parent.push((0, 0));
    let mut at = 0;
    while at < elements.len() {
        let mut row = Vec::with_capacity(perms.len());
        for (g, perm) in perms.iter().enumerate() {
            let product: Vec<u32> = elements[at].iter().map(|&c| perm[c as usize]).collect();
            let id = match index.get(&product) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    index.insert(product.clone(), id);
                    elements.push(product);
                    let mut w = words[at].clone();
                    match w.last_mut() {
                        Some((last, e)) if *last == g => *e += 1,
                        _ => w.push((g, 1)),
                    }
                    words.push(w);
                    parent.push((at, g));
                    id
                }
            };
            row.push(id);
        }
        right.push(row);
        at += 1;
    }

    let order = elements.len();
    let mut mul = vec![ElementId::new(0); order * order];
    for x in 0..order {
        mul[x * order] = ElementId::new(x);
        for y in 1..order {
            let (p, g) = parent[y];
            let xp = mul[x * order + p].index();
            mul[x * order + y] = ElementId::new(right[xp][g]);
        }
    }

    let short = names.iter().all(|n| n.len() == 1);
    let labels = words.iter().map(|w| word_label(w, names, short)).collect();
    let assignment: Vec<ElementId> = (0..perms.len()).map(|g| ElementId::new(right[0][g])).collect();
    let mut generators = Vec::new();
    for &a in &assignment {
        if !generators.contains(&a) {
            generators.push(a);
        }
    }
    let group = CayleyGroup::from_flat(order, mul, labels, generators)?;
    Ok(Realization { group, assignment })
}

fn word_label(word: &[(usize, i64)], names: &[String], short: bool) -> String {
    if word.is_empty() {
        return String::from("e");
    }
    let mut out = String::new();
    for (i, &(g, e)) in word.iter().enumerate() {
        if i > 0 && !short {
            out.push('*');
        }
        out.push_str(&names[g]);
        if e != 1 {
            out.push_str(&alloc::format!("^{e}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(text: &str) -> Result<Realization, EnumerationError> {
        todd_coxeter(&Presentation::parse(text).unwrap(), DEFAULT_MAX_COSETS)
    }

    #[test]
    fn cyclic_five() {
        let p = Presentation::parse("< a | a^5 = 1 >").unwrap();
        let r = todd_coxeter(&p, 100).unwrap();
        assert_eq!(r.group.order(), 5);
        assert!(r.group.is_abelian());
        assert_eq!(r.group.labels(), &["e", "a", "a^2", "a^3", "a^4"]);
        assert!(r.satisfies(&p));
    }

    #[test]
    fn section_five_counterexamples() {
        let r = enumerate("< a, b | a^4 = b^3 = 1, b a = a b^2, b a^2 = a^2 b >").unwrap();
        assert_eq!(r.group.order(), 12);
        let r = enumerate("< a, b | a^4 = b^2 = 1, b a = (a b)^3, b a^2 = a^2 b >").unwrap();
        assert_eq!(r.group.order(), 16);
    }

    #[test]
    fn dihedral_orders() {
        for n in 1..=10 {
            let text = alloc::format!("< a, b | a^{n} = b^2 = 1, a b a = b >");
            let p = Presentation::parse(&text).unwrap();
            let r = todd_coxeter(&p, 1000).unwrap();
            assert_eq!(r.group.order(), 2 * n, "n = {n}");
            assert!(r.satisfies(&p));
        }
    }

    #[test]
    fn trivial_and_collapsing() {
        assert_eq!(enumerate("< a | a >").unwrap().group.order(), 1);
        // a^2 = a^3 forces a = e
        assert_eq!(enumerate("< a, b | a^2 = a^3, b^2 >").unwrap().group.order(), 2);
        let r = enumerate("< a, b | a = b, a^3 >").unwrap();
        assert_eq!(r.group.order(), 3);
        assert_eq!(r.assignment[0], r.assignment[1]);
        assert_eq!(r.group.generators().len(), 1);
    }

    #[test]
    fn multi_letter_names_are_separated() {
        let r = enumerate("< x1, x2 | x1^2, x2^2, x1 x2 = x2 x1 >").unwrap();
        assert_eq!(r.group.order(), 4);
        assert!(r.group.labels().iter().any(|l| l == "x1*x2"));
    }

    #[test]
    fn infinite_groups_hit_the_limit() {
        let p = Presentation::parse("< a, b | a^2 b = b a^3 >").unwrap();
        assert_eq!(todd_coxeter(&p, 1000).unwrap_err(), EnumerationError::CosetLimitExceeded { limit: 1000 });
        let free = Presentation::parse("< a | >").unwrap();
        assert!(matches!(todd_coxeter(&free, 50), Err(EnumerationError::CosetLimitExceeded { .. })));
    }
}

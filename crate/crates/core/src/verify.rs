//! Exhaustive verification suites over a fixed corpus of small groups.
//!
//! Each suite checks one equivalence, implication or identity against
//! every applicable corpus entry and stops at the first failure. The
//! corpus order is fixed, so the failure reported is deterministic.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::{self, CatalogEntry};
use crate::group::{are_isomorphic, CayleyGroup, ElementId};
use crate::presentation::{todd_coxeter, EnumerationError, Presentation, DEFAULT_MAX_COSETS};
use crate::sqcomm::{self, REL_ABAB, REL_B2A};

/// The order-12 group satisfying `a²b = ba²` and `(ab)² = (ba)²` but not `b²a = ab²`.
pub const ORDER_12_PRESENTATION: &str = "< a, b | a^4 = b^3 = 1, b a = a b^2, b a^2 = a^2 b >";
/// The order-16 group satisfying `a²b = ba²` and `ab² = b²a` but not `(ab)² = (ba)²`.
pub const ORDER_16_PRESENTATION: &str = "< a, b | a^4 = b^2 = 1, b a = (a b)^3, b a^2 = a^2 b >";

pub const ORDER_12_NAME: &str = "P12";
pub const ORDER_16_NAME: &str = "P16";

fn presented(name: &str, text: &str) -> CatalogEntry {
    let r = todd_coxeter(&Presentation::parse(text).expect("fixed presentation parses"), DEFAULT_MAX_COSETS)
        .expect("fixed presentation is finite");
    CatalogEntry {
        name: name.into(),
        group: r.group,
        canonical_generators: r.assignment,
        family_params: Vec::new(),
        warning: None,
    }
}

/// Coherent `j` in `1..n` for the metacyclic family, i.e. `j^m ≡ 1 (mod n)`.
pub fn coherent_twists(n: u64, m: u64) -> impl Iterator<Item = u64> {
    (1..n.max(2)).filter(move |&j| (0..m).fold(1 % n, |acc, _| acc * j % n) == 1 % n)
}

/// The verification corpus, in a fixed order with unique names: the
/// groups of order below 12, further dihedral groups up to `D16`,
/// Heisenberg groups mod 2 and 3, the coherent metacyclic grid with
/// `n ≤ 12` and `2 ≤ m ≤ 4`, the two presented groups, Baumslag–Solitar
/// quotients and direct products up to order 64.
pub fn corpus() -> Vec<CatalogEntry> {
    let c = |n| catalog::cyclic(n).expect("valid order");
    let d = |n| catalog::dihedral(n).expect("valid order");
    let ea = |p, k| catalog::elementary_abelian(p, k).expect("valid parameters");
    let heis = |p| catalog::heisenberg_mod(p).expect("valid prime");
    let q8 = catalog::quaternion8;
    let prod = |a: &CatalogEntry, b: &CatalogEntry| catalog::direct_product(a, b);

    let mut out = catalog::small_groups_under_12();
    out.extend([1, 2, 6, 7, 8].map(d));
    out.push(heis(2));
    out.push(heis(3));
    for n in 2..=12 {
        for m in 2..=4 {
            for j in coherent_twists(n, m) {
                out.push(catalog::metacyclic(n, m, j).expect("coherent parameters"));
            }
        }
    }
    out.push(presented(ORDER_12_NAME, ORDER_12_PRESENTATION));
    out.push(presented(ORDER_16_NAME, ORDER_16_PRESENTATION));
    for (p, q, extra) in [(1, 1, "a^5 = 1, b^5 = 1"), (2, 2, "a^4 = b^3 = 1, b a = a b^2"), (1, 3, "a^4 = 1, b^2 = 1")]
    {
        out.push(catalog::bs_relation_quotient(p, q, extra, DEFAULT_MAX_COSETS).expect("finite quotient"));
    }

    let (c2, c3, c4) = (c(2), c(3), c(4));
    let (d6, d8, d10) = (d(3), d(4), d(5));
    let m16 = catalog::metacyclic(8, 2, 5).expect("coherent parameters");
    out.extend([
        prod(&d8, &c2),
        prod(&q8(), &c2),
        prod(&d6, &c2),
        prod(&d6, &c3),
        prod(&d8, &c3),
        prod(&q8(), &c3),
        prod(&d10, &c2),
        prod(&prod(&c2, &c2), &c3),
        prod(&prod(&c4, &c2), &c2),
        ea(2, 4),
        ea(2, 5),
        ea(3, 3),
        prod(&prod(&d8, &c2), &c2),
        prod(&prod(&q8(), &c2), &c2),
        prod(&prod(&d6, &c2), &c2),
        prod(&m16, &c2),
        prod(&d8, &c4),
        prod(&d8, &d8),
        prod(&d8, &q8()),
        prod(&q8(), &q8()),
        prod(&d6, &d6),
        prod(&heis(3), &c2),
    ]);
    out
}

/// How a suite went: the number of cases checked and the first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub cases: usize,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub struct Suite {
    pub name: &'static str,
    pub claim: &'static str,
    pub run: fn(&[CatalogEntry]) -> Outcome,
}

/// Accumulates cases until the first failure.
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failure: None }
    }

    /// Records one case; `check` returns a failure description.
    fn case(&mut self, check: impl FnOnce() -> Option<String>) {
        if self.failure.is_none() {
            self.cases += 1;
            self.failure = check();
        }
    }

    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if self.failure.is_none() && !ok {
            self.failure = Some(msg());
        }
    }

    fn done(self) -> Outcome {
        Outcome { cases: self.cases, failure: self.failure }
    }
}

fn pair(g: &CayleyGroup, (x, y): (ElementId, ElementId)) -> String {
    format!("x = {}, y = {}", g.label(x), g.label(y))
}

fn two_generated(corpus: &[CatalogEntry]) -> impl Iterator<Item = (&CatalogEntry, ElementId, ElementId)> {
    corpus.iter().filter_map(|e| match e.canonical_generators[..] {
        [a, b] => Some((e, a, b)),
        _ => None,
    })
}

fn by_name<'a>(corpus: &'a [CatalogEntry], name: &str) -> Option<&'a CatalogEntry> {
    corpus.iter().find(|e| e.name == name)
}

fn census(_: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    let list = catalog::small_groups_under_12();
    t.require(list.len() == 19, || format!("expected 19 groups, found {}", list.len()));
    let mut failing = Vec::new();
    for e in &list {
        t.case(|| {
            if !sqcomm::is_square_commutative(&e.group) {
                failing.push(e.name.clone());
            }
            None
        });
    }
    t.require(failing == ["D6", "D10"], || format!("not square commutative: {failing:?}"));
    t.done()
}

fn hat_equivalence(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for e in corpus {
        t.case(|| {
            let g = &e.group;
            let sq = sqcomm::is_square_commutative(g);
            let hat = sqcomm::hat_group(g).quotient().is_abelian();
            if sq != hat {
                return Some(format!("{}: square commutative {sq}, hat group abelian {hat}", e.name));
            }
            sq.then(|| sqcomm::sim_failure(g))
                .flatten()
                .map(|w| format!("{}: no d in Z2 with xy = yx d for {}", e.name, pair(g, w)))
        });
    }
    t.done()
}

fn squares_central(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for e in corpus {
        t.case(|| {
            let sq = sqcomm::is_square_commutative(&e.group);
            let central = sqcomm::squares_central(&e.group);
            (sq != central).then(|| format!("{}: square commutative {sq}, squares central {central}", e.name))
        });
    }
    t.done()
}

fn two_generator(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for (e, a, b) in two_generated(corpus) {
        t.case(|| {
            let sq = sqcomm::is_square_commutative(&e.group);
            match sqcomm::two_generator_criterion(&e.group, a, b) {
                Ok(r) if r.overall == sq => None,
                Ok(r) => Some(format!("{}: square commutative {sq}, criterion {}", e.name, r.overall)),
                Err(err) => Some(format!("{}: {err}", e.name)),
            }
        });
    }
    for (name, failing) in [(ORDER_12_NAME, REL_B2A), (ORDER_16_NAME, REL_ABAB)] {
        t.case(|| {
            let e = by_name(corpus, name)?;
            let [a, b] = e.canonical_generators[..] else {
                return Some(format!("{name}: expected two generators"));
            };
            let r = sqcomm::two_generator_criterion(&e.group, a, b).ok()?;
            let failed: Vec<&str> = r.relations.iter().filter(|v| !v.holds).map(|v| v.name.as_str()).collect();
            (failed != [failing]).then(|| format!("{name}: failing relations {failed:?}, expected [{failing:?}]"))
        });
    }
    t.done()
}

fn n_generator(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for e in corpus.iter().filter(|e| e.canonical_generators.len() >= 3) {
        t.case(|| {
            let sq = sqcomm::is_square_commutative(&e.group);
            match sqcomm::n_generator_criterion(&e.group, &e.canonical_generators) {
                Ok(r) if r.overall == sq => None,
                Ok(r) => Some(format!("{}: square commutative {sq}, criterion {}", e.name, r.overall)),
                Err(err) => Some(format!("{}: {err}", e.name)),
            }
        });
    }
    let cases = t.cases;
    t.require(cases >= 10, || format!("only {cases} groups with at least 3 generators"));
    t.done()
}

fn coverage(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for e in corpus.iter().filter(|e| sqcomm::is_square_commutative(&e.group)) {
        t.case(|| {
            let g = &e.group;
            match sqcomm::coverage_check(g, &e.canonical_generators) {
                Ok(true) => {}
                Ok(false) => return Some(format!("{}: C_n Z != G", e.name)),
                Err(err) => return Some(format!("{}: {err}", e.name)),
            }
            let [a, b] = e.canonical_generators[..] else { return None };
            g.elements().find_map(|x| match sqcomm::normal_form_two_gen(g, a, b, x) {
                Ok(nf) if nf.evaluate(g, a, b) == x => None,
                Ok(_) => Some(format!("{}: normal form of {} evaluates wrongly", e.name, g.label(x))),
                Err(err) => Some(format!("{}: {err}", e.name)),
            })
        });
    }
    t.done()
}

fn proof_identities(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for e in corpus.iter().filter(|e| sqcomm::is_square_commutative(&e.group)) {
        t.case(|| {
            let g = &e.group;
            match sqcomm::sandwich_check(g, -3..=3, -3..=3) {
                Ok(None) => {}
                Ok(Some(c)) => {
                    return Some(format!(
                        "{}: (xyx)^m y^n != y^n (xyx)^m for {}, m = {}, n = {}",
                        e.name,
                        pair(g, (c.x, c.y)),
                        c.m,
                        c.n
                    ))
                }
                Err(err) => return Some(format!("{}: {err}", e.name)),
            }
            if let Some(w) = sqcomm::fourth_power_check(g) {
                return Some(format!("{}: (xy)^4 != x^4 y^4 for {}", e.name, pair(g, w)));
            }
            match sqcomm::reorder_defect_check(g, &e.canonical_generators, 4) {
                Ok(None) => None,
                Ok(Some(c)) => {
                    let seq: Vec<&str> = c.sequence.iter().map(|&x| g.label(x)).collect();
                    Some(format!("{}: swapping position {} of {seq:?} leaves Z2", e.name, c.position))
                }
                Err(err) => Some(format!("{}: {err}", e.name)),
            }
        });
    }
    t.done()
}

fn enumeration(_: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    let order = |text: &str, limit| -> Result<usize, EnumerationError> {
        let p = Presentation::parse(text).expect("fixed presentation parses");
        todd_coxeter(&p, limit).map(|r| r.group.order())
    };
    let mut goldens: Vec<(String, usize)> =
        alloc::vec![(ORDER_12_PRESENTATION.into(), 12), (ORDER_16_PRESENTATION.into(), 16)];
    for n in 1..=10 {
        goldens.push((format!("< a, b | a^{n} = b^2 = 1, a b a = b >"), 2 * n));
    }
    for (text, expected) in &goldens {
        t.case(|| match order(text, DEFAULT_MAX_COSETS) {
            Ok(n) if n == *expected => None,
            Ok(n) => Some(format!("{text}: order {n}, expected {expected}")),
            Err(err) => Some(format!("{text}: {err}")),
        });
    }
    let bs = "< a, b | a^2 b = b a^3 >";
    t.case(|| match order(bs, 1000) {
        Err(EnumerationError::CosetLimitExceeded { limit: 1000 }) => None,
        other => Some(format!("{bs}: expected the coset limit to be hit, got {other:?}")),
    });
    t.done()
}

fn dihedral(_: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for n in 1..=8 {
        t.case(|| {
            let sq = sqcomm::is_square_commutative(&catalog::dihedral(n).ok()?.group);
            let expected = matches!(n, 1 | 2 | 4);
            (sq != expected).then(|| format!("D{}: square commutative {sq}, expected {expected}", 2 * n))
        });
    }
    t.done()
}

fn heisenberg(_: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    t.case(|| {
        let h = catalog::heisenberg_mod(3).ok()?;
        let mod_center = sqcomm::g_mod_center_abelian(&h.group);
        let sq = sqcomm::is_square_commutative(&h.group);
        (!mod_center || sq).then(|| format!("Heis3: G/Z abelian {mod_center}, square commutative {sq}"))
    });
    t.case(|| {
        let h = catalog::heisenberg_mod(2).ok()?;
        let d8 = catalog::dihedral(4).ok()?;
        let iso = matches!(are_isomorphic(&h.group, &d8.group), Ok(Some(_)));
        let sq = sqcomm::is_square_commutative(&h.group);
        (!iso || !sq).then(|| format!("Heis2: isomorphic to D8 {iso}, square commutative {sq}"))
    });
    t.done()
}

fn center_quotient(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for e in corpus.iter().filter(|e| sqcomm::is_square_commutative(&e.group)) {
        t.case(|| (!sqcomm::g_mod_center_abelian(&e.group)).then(|| format!("{}: G/Z is not abelian", e.name)));
    }
    t.done()
}

fn metacyclic(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for n in 3..=12 {
        for j in coherent_twists(n, 2).filter(|&j| j >= 2) {
            t.case(|| {
                let e = catalog::metacyclic(n, 2, j).ok()?;
                let sq = sqcomm::is_square_commutative(&e.group);
                let predicted = j % 2 == 1 && n == 2 * (j - 1);
                (sq != predicted).then(|| format!("{}: square commutative {sq}, predicted {predicted}", e.name))
            });
        }
    }
    for e in corpus.iter().filter(|e| sqcomm::is_square_commutative(&e.group)) {
        t.case(|| {
            sqcomm::power_exchange_check(&e.group, 6).map(|c| {
                format!(
                    "{}: x^{} y = y x^{} but the predicted power is not e for {}",
                    e.name,
                    c.p,
                    c.q,
                    pair(&e.group, (c.x, c.y))
                )
            })
        });
    }
    t.done()
}

fn conditional(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for (e, a, b) in two_generated(corpus) {
        t.case(|| {
            let c = match sqcomm::conditional_equivalence_checks(&e.group, a, b) {
                Ok(c) => c,
                Err(err) => return Some(format!("{}: {err}", e.name)),
            };
            [
                ("G/Z abelian and (ab)^2 = (ba)^2", c.center_quotient_and_square),
                ("a^2 b = b a^2 case", c.commuting_square_case),
                ("odd generator order case", c.odd_order_case),
            ]
            .into_iter()
            .find(|(_, bi)| !bi.holds())
            .map(|(name, bi)| format!("{}: {name}: left {}, right {}", e.name, bi.left, bi.right))
        });
    }
    t.done()
}

fn even_powers(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for (e, a, b) in two_generated(corpus) {
        let holds = sqcomm::two_generator_criterion(&e.group, a, b).is_ok_and(|r| r.overall);
        if !holds {
            continue;
        }
        t.case(|| {
            sqcomm::even_powers_central(&e.group, a, b)
                .map(|(x, p)| format!("{}: {}^{p} is not central", e.name, e.group.label(x)))
        });
    }
    t.done()
}

fn z2_structure(corpus: &[CatalogEntry]) -> Outcome {
    let mut t = Tally::new();
    for e in corpus {
        t.case(|| {
            let g = &e.group;
            let z2 = sqcomm::z2_subgroup(g);
            let bad = z2.iter().find(|&d| g.mul(d, d) != g.identity() || g.elements().any(|y| !g.commutes(d, y)));
            if let Some(d) = bad {
                return Some(format!("{}: {} in Z2 is not a central involution", e.name, g.label(d)));
            }
            (!g.is_normal(&z2)).then(|| format!("{}: Z2 is not normal", e.name))
        });
    }
    t.done()
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "census",
        claim: "among groups of order below 12 only D6 and D10 are not square commutative",
        run: census,
    },
    Suite {
        name: "hat-group",
        claim: "square commutative iff G/Z2 is abelian, and then xy = yx d with d in Z2",
        run: hat_equivalence,
    },
    Suite { name: "central-squares", claim: "square commutative iff every square is central", run: squares_central },
    Suite {
        name: "two-generator",
        claim: "b^2 a = a b^2, a^2 b = b a^2, (ab)^2 = (ba)^2 characterize 2-generated groups; each presented group fails exactly one",
        run: two_generator,
    },
    Suite {
        name: "n-generator",
        claim: "the pair and triple relations characterize groups with 3 or more generators",
        run: n_generator,
    },
    Suite { name: "coverage", claim: "G = C_n Z and every element is a^i b^j (ab)^(2l)", run: coverage },
    Suite {
        name: "identities",
        claim: "sandwich commutation, (xy)^4 = x^4 y^4 and reordering up to Z2",
        run: proof_identities,
    },
    Suite {
        name: "center-quotient",
        claim: "square commutative implies G/Z abelian",
        run: center_quotient,
    },
    Suite { name: "even-powers", claim: "even powers of a, b and ab are central", run: even_powers },
    Suite { name: "z2", claim: "Z2 is a normal subgroup of central involutions", run: z2_structure },
    Suite {
        name: "enumeration",
        claim: "coset enumeration reproduces the presented orders and diverges on BS(2,3)",
        run: enumeration,
    },
    Suite { name: "dihedral", claim: "D2n with n <= 8 is square commutative exactly for n = 1, 2, 4", run: dihedral },
    Suite {
        name: "heisenberg",
        claim: "Heis3 has G/Z abelian but is not square commutative; Heis2 is D8",
        run: heisenberg,
    },
    Suite {
        name: "metacyclic",
        claim: "M(n,2,j) is square commutative iff j is odd and n = 2(j-1); power exchange bounds orders",
        run: metacyclic,
    },
    Suite { name: "conditional", claim: "the three conditional equivalences hold", run: conditional },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let c = corpus();
        assert!(c.len() >= 40);
        assert!(c.iter().all(|e| e.group.order() <= 64));
        assert!(c.iter().all(|e| e.group.generates(&e.canonical_generators)));
        assert!(c.iter().filter(|e| e.canonical_generators.len() >= 3).count() >= 10);
        for (i, e) in c.iter().enumerate() {
            assert!(c[..i].iter().all(|f| f.name != e.name), "duplicate name {}", e.name);
            assert!(e.warning.is_none());
        }
    }

    #[test]
    fn coherent_twist_lists() {
        assert_eq!(coherent_twists(8, 2).collect::<Vec<_>>(), [1, 3, 5, 7]);
        assert_eq!(coherent_twists(12, 2).collect::<Vec<_>>(), [1, 5, 7, 11]);
        assert_eq!(coherent_twists(7, 3).collect::<Vec<_>>(), [1, 2, 4]);
        assert_eq!(coherent_twists(1, 2).collect::<Vec<_>>(), [1]);
    }

    #[test]
    fn every_suite_passes() {
        let c = corpus();
        for s in SUITES {
            let o = (s.run)(&c);
            assert!(o.passed(), "{}: {:?}", s.name, o.failure);
            assert!(o.cases > 0, "{} checked nothing", s.name);
        }
    }
}

//! Deterministic group constructors.
//!
//! Families are built directly as Cayley tables. The only exceptions are
//! the relation-defined quotients and incoherent metacyclic parameters,
//! which go through coset enumeration. Every entry carries the generators
//! its family is usually presented with.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::group::{CayleyGroup, ElementId, GroupError};
use crate::presentation::{todd_coxeter, EnumerationError, ParseError, Presentation, DEFAULT_MAX_COSETS};

/// Largest order a directly constructed family may have.
pub const MAX_FAMILY_ORDER: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

impl From<GroupError> for CatalogError {
    fn from(e: GroupError) -> Self {
        CatalogError::Enumeration(EnumerationError::Group(e))
    }
}

fn bad(msg: impl Into<String>) -> CatalogError {
    CatalogError::BadParameter(msg.into())
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: CayleyGroup,
    pub canonical_generators: Vec<ElementId>,
    pub family_params: Vec<(String, i64)>,
    /// Set when the construction deviated from what the parameters promise.
    pub warning: Option<String>,
}

impl CatalogEntry {
    fn new(name: impl Into<String>, group: CayleyGroup, gens: Vec<ElementId>, params: &[(&str, i64)]) -> Self {
        CatalogEntry {
            name: name.into(),
            group,
            canonical_generators: gens,
            family_params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            warning: None,
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// Builds a table from a multiplication closure on indices.
fn build(
    order: usize,
    mul: impl Fn(usize, usize) -> usize,
    labels: Vec<String>,
    gens: &[usize],
) -> Result<(CayleyGroup, Vec<ElementId>), GroupError> {
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let z = mul(x, y);
            debug_assert!(z < order);
            table.push(ElementId::new(z));
        }
    }
    let gens: Vec<ElementId> = gens.iter().map(|&g| ElementId::new(g)).collect();
    let group = CayleyGroup::from_flat(order, table, labels, gens.clone())?;
    Ok((group, gens))
}

fn check_order(order: u64) -> Result<usize, CatalogError> {
    if order as usize > MAX_FAMILY_ORDER || order > MAX_FAMILY_ORDER as u64 {
        return Err(bad(format!("order {order} exceeds {MAX_FAMILY_ORDER}")));
    }
    Ok(order as usize)
}

/// `C_n = <a>`; labels `e, a, a^2, ...`.
pub fn cyclic(n: u64) -> Result<CatalogEntry, CatalogError> {
    if n == 0 {
        return Err(bad("cyclic: n must be at least 1"));
    }
    let n = check_order(n)?;
    let labels = (0..n).map(|k| if k == 0 { "e".into() } else { power_label("a", k) }).collect();
    let gens: &[usize] = if n > 1 { &[1] } else { &[] };
    let (group, gens) = build(n, |x, y| (x + y) % n, labels, gens)?;
    Ok(CatalogEntry::new(format!("C{n}"), group, gens, &[("n", n as i64)]))
}

/// `(Z/p)^k`; labels are coordinate tuples, generators the unit vectors.
pub fn elementary_abelian(p: u64, k: u32) -> Result<CatalogEntry, CatalogError> {
    if !is_prime(p) {
        return Err(bad(format!("elementary abelian: {p} is not prime")));
    }
    if k == 0 {
        return Err(bad("elementary abelian: k must be at least 1"));
    }
    let order = check_order(p.checked_pow(k).ok_or_else(|| bad("elementary abelian: order overflow"))?)?;
    let (p, k) = (p as usize, k as usize);
    let digits = |mut x: usize| {
        let mut d = vec![0; k];
        for slot in d.iter_mut().rev() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let mul = |mut x: usize, mut y: usize| {
        let (mut out, mut weight) = (0, 1);
        for _ in 0..k {
            out += (x % p + y % p) % p * weight;
            weight *= p;
            x /= p;
            y /= p;
        }
        out
    };
    let labels = (0..order)
        .map(|x| {
            let d: Vec<String> = digits(x).iter().map(ToString::to_string).collect();
            format!("({})", d.join(","))
        })
        .collect();
    let gens: Vec<usize> = (0..k).map(|i| p.pow((k - 1 - i) as u32)).collect();
    let (group, gens) = build(order, mul, labels, &gens)?;
    Ok(CatalogEntry::new(format!("C{p}^{k}"), group, gens, &[("p", p as i64), ("k", k as i64)]))
}

/// `D_{2n} = <a, b | a^n = b^2 = 1, a b a = b>` of order `2n`. Index `i`
/// is `a^i`, index `n + i` is `a^i b`.
pub fn dihedral(n: u64) -> Result<CatalogEntry, CatalogError> {
    if n == 0 {
        return Err(bad("dihedral: n must be at least 1"));
    }
    let n = check_order(2 * n)? / 2;
    let split = |x: usize| (x % n, x / n);
    let mul = |x: usize, y: usize| {
        let ((i, s), (j, t)) = (split(x), split(y));
        let rot = if s == 0 { i + j } else { i + n - j };
        (s ^ t) * n + rot % n
    };
    let labels = (0..2 * n)
        .map(|x| {
            let (i, s) = split(x);
            let label = power_label("a", i) + if s == 1 { "b" } else { "" };
            if label.is_empty() {
                "e".into()
            } else {
                label
            }
        })
        .collect();
    let (group, gens) = build(2 * n, mul, labels, &[1 % n, n])?;
    Ok(CatalogEntry::new(format!("D{}", 2 * n), group, gens, &[("n", n as i64)]))
}

/// `{±1, ±i, ±j, ±k}`, generated by `i` and `j`.
pub fn quaternion8() -> CatalogEntry {
    // unit products as (sign flip, unit) over units 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = |x: usize, y: usize| {
        let (flip, unit) = UNIT[x / 2][y / 2];
        2 * unit + ((x % 2) ^ (y % 2) ^ flip)
    };
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    let (group, gens) = build(8, mul, labels, &[2, 4]).expect("quaternion table is a group");
    CatalogEntry::new("Q8", group, gens, &[])
}

/// Upper unitriangular 3×3 matrices over `Z/p`, written `(x, y, z)` for
/// the entries above the diagonal with `z` in the corner. Generated by the
/// two superdiagonal transvections.
pub fn heisenberg_mod(p: u64) -> Result<CatalogEntry, CatalogError> {
    if !is_prime(p) || p > 7 {
        return Err(bad(format!("heisenberg: p must be a prime at most 7, got {p}")));
    }
    let p = p as usize;
    let split = |v: usize| (v / (p * p), v / p % p, v % p);
    let mul = |u: usize, v: usize| {
        let ((x, y, z), (x2, y2, z2)) = (split(u), split(v));
        (x + x2) % p * p * p + (y + y2) % p * p + (z + z2 + x * y2) % p
    };
    let labels = (0..p * p * p)
        .map(|v| {
            let (x, y, z) = split(v);
            format!("({x},{y},{z})")
        })
        .collect();
    let (group, gens) = build(p * p * p, mul, labels, &[p * p, p])?;
    Ok(CatalogEntry::new(format!("Heis{p}"), group, gens, &[("p", p as i64)]))
}

fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        e >>= 1;
    }
    result
}

/// `<a, b | a^n = b^m = e, a b = b a^j>`. Element `b^i a^k` has index
/// `i n + k`. Without `j^m ≡ 1 (mod n)` the group has fewer than `mn`
/// elements; it is then enumerated and `warning` says so.
pub fn metacyclic(n: u64, m: u64, j: u64) -> Result<CatalogEntry, CatalogError> {
    metacyclic_with_limit(n, m, j, DEFAULT_MAX_COSETS)
}

pub fn metacyclic_with_limit(n: u64, m: u64, j: u64, max_cosets: usize) -> Result<CatalogEntry, CatalogError> {
    if n == 0 || m == 0 || j == 0 {
        return Err(bad("metacyclic: n, m and j must be at least 1"));
    }
    let order = check_order(n.checked_mul(m).ok_or_else(|| bad("metacyclic: order overflow"))?)?;
    let name = format!("M({n},{m},{j})");
    let params = [("n", n as i64), ("m", m as i64), ("j", j as i64)];
    let residue = pow_mod(j, m, n);
    if residue != 1 % n {
        let text = format!("< a, b | a^{n} = b^{m} = 1, a b = b a^{j} >");
        let r = todd_coxeter(&Presentation::parse(&text)?, max_cosets)?;
        let mut entry = CatalogEntry::new(name, r.group, r.assignment, &params);
        entry.warning = Some(format!(
            "j^m = {residue} (mod {n}), not 1: group collapses to order {} instead of {order}",
            entry.group.order()
        ));
        return Ok(entry);
    }

    let (n, m, j) = (n as usize, m as usize, (j % n) as usize);
    // j^l mod n for l < m
    let twists: Vec<usize> = (0..m)
        .scan(1 % n, |acc, _| {
            let cur = *acc;
            *acc = *acc * j % n;
            Some(cur)
        })
        .collect();
    let mul = |x: usize, y: usize| {
        let ((i, k), (l, r)) = ((x / n, x % n), (y / n, y % n));
        (i + l) % m * n + (k * twists[l] + r) % n
    };
    let labels = (0..order)
        .map(|x| {
            let label = power_label("b", x / n) + &power_label("a", x % n);
            if label.is_empty() {
                "e".into()
            } else {
                label
            }
        })
        .collect();
    let (group, gens) = build(order, mul, labels, &[1 % n, if m > 1 { n } else { 0 }])?;
    Ok(CatalogEntry::new(name, group, gens, &params))
}

/// Direct product; generators are those of `a` followed by those of `b`.
pub fn direct_product(a: &CatalogEntry, b: &CatalogEntry) -> CatalogEntry {
    let group = a.group.direct_product(&b.group);
    let n = b.group.order();
    let gens = a
        .canonical_generators
        .iter()
        .map(|g| ElementId::new(g.index() * n + b.group.identity().index()))
        .chain(b.canonical_generators.iter().map(|h| ElementId::new(a.group.identity().index() * n + h.index())))
        .collect();
    let mut params = a.family_params.clone();
    params.extend(b.family_params.iter().cloned());
    CatalogEntry {
        name: format!("{}x{}", a.name, b.name),
        group,
        canonical_generators: gens,
        family_params: params,
        warning: None,
    }
}

/// The 19 groups of order 1 to 11, one per isomorphism class, ordered by
/// order.
pub fn small_groups_under_12() -> Vec<CatalogEntry> {
    let c = |n| cyclic(n).expect("valid order");
    let ea = |p, k| elementary_abelian(p, k).expect("valid parameters");
    let d = |n| dihedral(n).expect("valid order");
    vec![
        c(1),
        c(2),
        c(3),
        c(4),
        ea(2, 2).renamed("C2xC2"),
        c(5),
        c(6),
        d(3),
        c(7),
        c(8),
        direct_product(&c(4), &c(2)),
        ea(2, 3).renamed("C2^3"),
        d(4),
        quaternion8(),
        c(9),
        ea(3, 2).renamed("C3xC3"),
        c(10),
        d(5),
        c(11),
    ]
}

/// Finite quotient `<a, b | a^p b = b a^q, extra>` of a Baumslag–Solitar
/// group, realized by coset enumeration. `extra` is a comma-separated list
/// of relations over `a` and `b`, possibly empty.
pub fn bs_relation_quotient(p: i64, q: i64, extra: &str, max_cosets: usize) -> Result<CatalogEntry, CatalogError> {
    if p == 0 || q == 0 {
        return Err(bad("bs: p and q must be nonzero"));
    }
    let extra = extra.trim();
    let text = if extra.is_empty() {
        format!("< a, b | a^{p} b = b a^{q} >")
    } else {
        format!("< a, b | a^{p} b = b a^{q}, {extra} >")
    };
    let r = todd_coxeter(&Presentation::parse(&text)?, max_cosets)?;
    let name = if extra.is_empty() {
        format!("BS({p},{q})")
    } else {
        format!("BS({p},{q})/<{}>", extra.split_whitespace().collect::<String>())
    };
    Ok(CatalogEntry::new(name, r.group, r.assignment, &[("p", p), ("q", q)]))
}

/// Family names accepted by [`from_spec`].
pub const FAMILIES: [&str; 7] = ["cyclic", "dihedral", "elemabelian", "q8", "heisenberg", "metacyclic", "bs"];

/// Builds an entry from `family:param:...`, e.g. `dihedral:4`,
/// `metacyclic:8:2:5` or `bs:1:1` (with `extra` relations).
pub fn from_spec(spec: &str, extra: Option<&str>, max_cosets: usize) -> Result<CatalogEntry, CatalogError> {
    let mut parts = spec.trim().split(':');
    let family = parts.next().unwrap_or_default();
    let params: Vec<&str> = parts.collect();
    let arity = match family {
        "q8" => 0,
        "cyclic" | "dihedral" | "heisenberg" => 1,
        "elemabelian" | "bs" => 2,
        "metacyclic" => 3,
        _ => return Err(bad(format!("unknown family {family:?}"))),
    };
    if params.len() != arity {
        return Err(bad(format!("{family} takes {arity} parameter(s), got {}", params.len())));
    }
    if extra.is_some() && family != "bs" {
        return Err(bad("extra relations only apply to bs"));
    }
    let num = |i: usize| -> Result<i64, CatalogError> {
        params[i].trim().parse().map_err(|_| bad(format!("{family}: {:?} is not an integer", params[i])))
    };
    let nat = |i: usize| -> Result<u64, CatalogError> {
        let v = num(i)?;
        u64::try_from(v).map_err(|_| bad(format!("{family}: parameter {v} must be non-negative")))
    };
    match family {
        "q8" => Ok(quaternion8()),
        "cyclic" => cyclic(nat(0)?),
        "dihedral" => dihedral(nat(0)?),
        "heisenberg" => heisenberg_mod(nat(0)?),
        "elemabelian" => {
            let k = u32::try_from(nat(1)?).map_err(|_| bad("elemabelian: k too large"))?;
            elementary_abelian(nat(0)?, k)
        }
        "metacyclic" => metacyclic_with_limit(nat(0)?, nat(1)?, nat(2)?, max_cosets),
        _ => bs_relation_quotient(num(0)?, num(1)?, extra.unwrap_or(""), max_cosets),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;
    use crate::sqcomm::is_square_commutative;

    fn relations_hold(e: &CatalogEntry, text: &str) -> bool {
        let p = Presentation::parse(text).unwrap();
        p.relators().iter().all(|r| r.evaluate(&e.group, &e.canonical_generators) == e.group.identity())
    }

    #[test]
    fn cyclic_and_elementary() {
        assert_eq!(cyclic(1).unwrap().group.order(), 1);
        assert!(cyclic(1).unwrap().canonical_generators.is_empty());
        let c6 = cyclic(6).unwrap();
        assert_eq!(c6.group.order(), 6);
        assert!(c6.group.is_abelian());
        assert_eq!(c6.group.label(ElementId::new(3)), "a^3");
        let e = elementary_abelian(2, 3).unwrap();
        assert_eq!(e.group.order(), 8);
        assert!(e.group.elements().all(|x| e.group.mul(x, x) == e.group.identity()));
        assert!(e.group.generates(&e.canonical_generators));
        assert_eq!(e.group.label(e.canonical_generators[0]), "(1,0,0)");
        assert!(matches!(cyclic(0), Err(CatalogError::BadParameter(_))));
        assert!(matches!(elementary_abelian(4, 2), Err(CatalogError::BadParameter(_))));
        assert!(matches!(elementary_abelian(2, 13), Err(CatalogError::BadParameter(_))));
    }

    #[test]
    fn dihedral_relations_and_orders() {
        for n in 1..=10u64 {
            let d = dihedral(n).unwrap();
            assert_eq!(d.group.order() as u64, 2 * n);
            assert!(relations_hold(&d, &format!("< a, b | a^{n} = b^2 = 1, a b a = b >")));
            assert!(d.group.generates(&d.canonical_generators));
        }
        assert!(!is_square_commutative(&dihedral(3).unwrap().group));
        assert!(is_square_commutative(&dihedral(4).unwrap().group));
        assert!(!is_square_commutative(&dihedral(5).unwrap().group));
        assert_eq!(dihedral(4).unwrap().group.label(ElementId::new(6)), "a^2b");
    }

    #[test]
    fn quaternions() {
        let q = quaternion8();
        let g = &q.group;
        let l = |s| g.element_by_label(s).unwrap();
        assert_eq!(g.mul(l("i"), l("j")), l("k"));
        assert_eq!(g.mul(l("j"), l("i")), l("-k"));
        assert_eq!(g.mul(l("k"), l("k")), l("-1"));
        let mut squares = g.squares_set();
        squares.sort();
        assert_eq!(squares, vec![l("1"), l("-1")]);
        assert!(is_square_commutative(g));
    }

    #[test]
    fn heisenberg() {
        // oracle: commutation of explicit 3x3 matrices mod 3
        type M = [[u32; 3]; 3];
        let mat = |x: u32, y: u32, z: u32| -> M { [[1, x, z], [0, 1, y], [0, 0, 1]] };
        let mm = |a: M, b: M| -> M {
            let mut c = [[0; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum::<u32>() % 3;
                }
            }
            c
        };
        let all: Vec<M> = (0..27).map(|v| mat(v / 9, v / 3 % 3, v % 3)).collect();
        let central = all.iter().filter(|&&a| all.iter().all(|&b| mm(a, b) == mm(b, a))).count();

        let h = heisenberg_mod(3).unwrap();
        assert_eq!(h.group.order(), 27);
        assert_eq!(h.group.center().len(), central);
        for u in 0..27 {
            for v in 0..27 {
                let prod = mm(all[u], all[v]);
                let w = h.group.mul(ElementId::new(u), ElementId::new(v)).index();
                assert_eq!(all[w], prod);
            }
        }
        assert!(!is_square_commutative(&h.group));
        let h2 = heisenberg_mod(2).unwrap();
        assert!(are_isomorphic(&h2.group, &dihedral(4).unwrap().group).unwrap().is_some());
        assert!(matches!(heisenberg_mod(11), Err(CatalogError::BadParameter(_))));
    }

    #[test]
    fn metacyclic_family() {
        for n in 1..=7u64 {
            let e = metacyclic(n, 1, 1).unwrap();
            assert!(are_isomorphic(&e.group, &cyclic(n).unwrap().group).unwrap().is_some());
        }
        let m = metacyclic(4, 2, 3).unwrap();
        assert_eq!(m.group.order(), 8);
        assert!(are_isomorphic(&m.group, &dihedral(4).unwrap().group).unwrap().is_some());
        assert!(is_square_commutative(&m.group));
        assert!(relations_hold(&m, "< a, b | a^4 = b^2 = 1, a b = b a^3 >"));

        let m = metacyclic(8, 2, 3).unwrap();
        assert_eq!(m.group.order(), 16);
        assert!(!is_square_commutative(&m.group));
        assert!(m.warning.is_none());

        // 2^2 = 4 != 1 mod 5: a^3 = e, and a = a^(j^m) forces a collapse
        let m = metacyclic(5, 2, 2).unwrap();
        assert!(m.group.order() < 10);
        assert!(m.warning.is_some());
    }

    #[test]
    fn small_groups() {
        let list = small_groups_under_12();
        assert_eq!(list.len(), 19);
        let names: Vec<&str> = list.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D6", "C7", "C8", "C4xC2", "C2^3", "D8", "Q8", "C9",
                "C3xC3", "C10", "D10", "C11"
            ]
        );
        for (i, a) in list.iter().enumerate() {
            assert!(a.group.generates(&a.canonical_generators), "{}", a.name);
            for b in &list[..i] {
                assert!(are_isomorphic(&a.group, &b.group).unwrap().is_none(), "{} ~ {}", a.name, b.name);
            }
        }
    }

    #[test]
    fn bs_quotients() {
        let e = bs_relation_quotient(1, 1, "a^5=1, b^5=1", DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(e.group.order(), 25);
        assert!(e.group.is_abelian());
        let e = bs_relation_quotient(2, 2, "a^4=b^3=1, b a = a b^2", DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(e.group.order(), 12);
        let e = bs_relation_quotient(1, 3, "a^4=1, b^2=1", DEFAULT_MAX_COSETS).unwrap();
        assert!(is_square_commutative(&e.group));
        assert!(matches!(
            bs_relation_quotient(2, 3, "", 1000),
            Err(CatalogError::Enumeration(EnumerationError::CosetLimitExceeded { limit: 1000 }))
        ));
        assert!(matches!(bs_relation_quotient(1, 1, "c = 1", 1000), Err(CatalogError::Syntax(_))));
    }

    #[test]
    fn specs() {
        assert_eq!(from_spec("dihedral:4", None, 1000).unwrap().name, "D8");
        assert_eq!(from_spec("q8", None, 1000).unwrap().name, "Q8");
        assert_eq!(from_spec("elemabelian:3:2", None, 1000).unwrap().group.order(), 9);
        assert_eq!(from_spec("metacyclic:8:2:5", None, 1000).unwrap().group.order(), 16);
        assert_eq!(from_spec("heisenberg:3", None, 1000).unwrap().name, "Heis3");
        assert_eq!(from_spec("bs:1:1", Some("a^2, b^3"), 1000).unwrap().group.order(), 6);
        for bad_spec in ["dihedral", "dihedral:x", "dihedral:-1", "q8:1", "foo:1", "cyclic:1:2"] {
            assert!(matches!(from_spec(bad_spec, None, 1000), Err(CatalogError::BadParameter(_))), "{bad_spec}");
        }
    }
}

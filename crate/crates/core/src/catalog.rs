//! Group descriptors (the textual naming scheme used by the CLI, reports and
//! tests) and catalog generation over the named families.

use crate::groups::{self, FiniteGroup, GroupError};
use crate::numth;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("descriptor error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn parse_err(pos: usize, msg: impl Into<String>) -> CatalogError {
    CatalogError::Parse {
        pos,
        msg: msg.into(),
    }
}

/// One multiplicand of a group descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// `Z<n>`
    Cyclic(usize),
    /// `D<order>` (order = 2m)
    Dihedral(usize),
    /// `Q<order>` (order = 2^n, n >= 3)
    Quaternion(usize),
    /// `SD<order>` (order = 2^n, n >= 3)
    Semidihedral(usize),
    /// `M<order>` (order = p^n, n >= 3)
    Modular(usize),
    /// `E<order>` (order = p^k)
    ElementaryAbelian(usize),
    /// `Z<n>:Z<m>(<k>)`
    Semidirect { n: usize, m: usize, k: usize },
    /// `S<degree>`
    Symmetric(usize),
    /// `A<degree>`
    Alternating(usize),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::Cyclic(n) => write!(f, "Z{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Quaternion(n) => write!(f, "Q{n}"),
            Atom::Semidihedral(n) => write!(f, "SD{n}"),
            Atom::Modular(n) => write!(f, "M{n}"),
            Atom::ElementaryAbelian(n) => write!(f, "E{n}"),
            Atom::Semidirect { n, m, k } => write!(f, "Z{n}:Z{m}({k})"),
            Atom::Symmetric(d) => write!(f, "S{d}"),
            Atom::Alternating(d) => write!(f, "A{d}"),
        }
    }
}

impl Atom {
    fn build(&self) -> Result<FiniteGroup, GroupError> {
        match *self {
            Atom::Cyclic(n) => groups::cyclic(n),
            Atom::Dihedral(n) => groups::dihedral(n),
            Atom::Quaternion(n) => groups::generalized_quaternion(n),
            Atom::Semidihedral(n) => groups::semidihedral(n),
            Atom::Modular(n) => {
                let f = numth::factorize(n as u64).expect("validated at parse");
                let &[(p, e)] = f.pairs() else {
                    return Err(GroupError::InvalidParameters(format!(
                        "modular group order {n} is not a prime power"
                    )));
                };
                groups::modular(p as usize, e)
            }
            Atom::ElementaryAbelian(n) => {
                let f = numth::factorize(n as u64).expect("validated at parse");
                let &[(p, e)] = f.pairs() else {
                    return Err(GroupError::InvalidParameters(format!(
                        "elementary abelian order {n} is not a prime power"
                    )));
                };
                groups::elementary_abelian(p as usize, e)
            }
            Atom::Semidirect { n, m, k } => groups::semidirect_cyclic(n, m, k),
            Atom::Symmetric(d) => groups::symmetric(d),
            Atom::Alternating(d) => groups::alternating(d),
        }
    }
}

/// A parsed group descriptor: either a direct product of named atoms
/// (`Z4xZ2xZ3`, `Q8`, `Z7:Z3(2)xZ2`) or a Cayley-table file reference
/// (`file:<path>`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Product(Vec<Atom>),
    File(String),
}

impl GroupDescriptor {
    /// Parse a descriptor. Errors carry the byte position of the offending
    /// token.
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let text = text.trim();
        if let Some(path) = text.strip_prefix("file:") {
            if path.is_empty() {
                return Err(parse_err(5, "empty file path"));
            }
            return Ok(GroupDescriptor::File(path.to_string()));
        }
        if text.is_empty() {
            return Err(parse_err(0, "empty descriptor"));
        }
        let mut atoms = Vec::new();
        let mut pos = 0;
        for token in text.split('x') {
            if token.is_empty() {
                return Err(parse_err(pos, "empty factor"));
            }
            atoms.push(parse_atom(token, pos)?);
            pos += token.len() + 1;
        }
        Ok(GroupDescriptor::Product(atoms))
    }

    /// Canonical rendering; `parse` then `render` is idempotent.
    pub fn render(&self) -> String {
        match self {
            GroupDescriptor::Product(atoms) => atoms
                .iter()
                .map(Atom::to_string)
                .collect::<Vec<_>>()
                .join("x"),
            GroupDescriptor::File(path) => format!("file:{path}"),
        }
    }

    /// Construct the group. File descriptors are read from disk and labeled
    /// with the descriptor itself.
    pub fn build(&self) -> Result<FiniteGroup, CatalogError> {
        match self {
            GroupDescriptor::Product(atoms) => {
                let mut g = atoms[0].build()?;
                for atom in &atoms[1..] {
                    g = groups::direct_product(&g, &atom.build()?)?;
                }
                Ok(g)
            }
            GroupDescriptor::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
                    path: path.clone(),
                    source,
                })?;
                Ok(FiniteGroup::from_cayley_text(&text, &format!("file:{path}"))?)
            }
        }
    }
}

fn parse_atom(token: &str, base: usize) -> Result<Atom, CatalogError> {
    let upper = token.to_ascii_uppercase();
    let bytes = upper.as_bytes();
    let take_number = |s: &str, at: usize| -> Result<(usize, usize), CatalogError> {
        let digits: String = s.chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(parse_err(base + at, format!("expected a number in {token:?}")));
        }
        let value = digits
            .parse()
            .map_err(|_| parse_err(base + at, format!("number too large in {token:?}")))?;
        Ok((value, digits.len()))
    };

    match bytes[0] {
        b'S' if bytes.len() > 1 && bytes[1] == b'D' => {
            let (order, used) = take_number(&upper[2..], 2)?;
            expect_end(token, base, 2 + used)?;
            if !order.is_power_of_two() || order < 8 {
                return Err(parse_err(base, format!("SD{order}: order must be 2^n, n >= 3")));
            }
            Ok(Atom::Semidihedral(order))
        }
        b'S' => {
            let (d, used) = take_number(&upper[1..], 1)?;
            expect_end(token, base, 1 + used)?;
            if !(2..=5).contains(&d) {
                return Err(parse_err(base, format!("S{d}: supported degrees are 2..5")));
            }
            Ok(Atom::Symmetric(d))
        }
        b'A' => {
            let (d, used) = take_number(&upper[1..], 1)?;
            expect_end(token, base, 1 + used)?;
            if !(3..=5).contains(&d) {
                return Err(parse_err(base, format!("A{d}: supported degrees are 3..5")));
            }
            Ok(Atom::Alternating(d))
        }
        b'D' => {
            let (order, used) = take_number(&upper[1..], 1)?;
            expect_end(token, base, 1 + used)?;
            if order < 2 || order % 2 != 0 {
                return Err(parse_err(base, format!("D{order}: order must be even")));
            }
            Ok(Atom::Dihedral(order))
        }
        b'Q' => {
            let (order, used) = take_number(&upper[1..], 1)?;
            expect_end(token, base, 1 + used)?;
            if !order.is_power_of_two() || order < 8 {
                return Err(parse_err(base, format!("Q{order}: order must be 2^n, n >= 3")));
            }
            Ok(Atom::Quaternion(order))
        }
        b'M' => {
            let (order, used) = take_number(&upper[1..], 1)?;
            expect_end(token, base, 1 + used)?;
            match numth::factorize(order as u64).map(|f| f.pairs().to_vec()) {
                Ok(pairs) if pairs.len() == 1 && pairs[0].1 >= 3 => Ok(Atom::Modular(order)),
                _ => Err(parse_err(base, format!("M{order}: order must be p^n with n >= 3"))),
            }
        }
        b'E' => {
            let (order, used) = take_number(&upper[1..], 1)?;
            expect_end(token, base, 1 + used)?;
            if order < 2 || !numth::is_prime_power(order as u64) {
                return Err(parse_err(base, format!("E{order}: order must be a prime power")));
            }
            Ok(Atom::ElementaryAbelian(order))
        }
        b'Z' => {
            let (n, used) = take_number(&upper[1..], 1)?;
            if n == 0 {
                return Err(parse_err(base, "Z0 is not a group"));
            }
            let rest = &upper[1 + used..];
            if rest.is_empty() {
                return Ok(Atom::Cyclic(n));
            }
            // Z<n>:Z<m>(<k>)
            let rest = rest.strip_prefix(":Z").ok_or_else(|| {
                parse_err(base + 1 + used, format!("unexpected trailing {rest:?}"))
            })?;
            let (m, used_m) = take_number(rest, 1 + used + 2)?;
            let tail = &rest[used_m..];
            let inner = tail
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| {
                    parse_err(base, format!("{token:?}: expected (<multiplier>) after Z{n}:Z{m}"))
                })?;
            let (k, used_k) = take_number(inner, 0)?;
            if used_k != inner.len() {
                return Err(parse_err(base, format!("{token:?}: bad multiplier {inner:?}")));
            }
            if numth::gcd(k as u64, n as u64) != 1 {
                return Err(parse_err(base, format!("{token:?}: multiplier {k} not a unit mod {n}")));
            }
            if numth::pow_mod(k as u64, m as u64, n as u64) != 1 % n as u64 {
                return Err(parse_err(base, format!("{token:?}: {k}^{m} is not 1 mod {n}")));
            }
            Ok(Atom::Semidirect { n, m, k })
        }
        _ => Err(parse_err(base, format!("unknown family in {token:?}"))),
    }
}

fn expect_end(token: &str, base: usize, used: usize) -> Result<(), CatalogError> {
    if used == token.len() {
        Ok(())
    } else {
        Err(parse_err(base + used, format!("unexpected trailing {:?}", &token[used..])))
    }
}

/// Catalog families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    Abelian,
    Dihedral,
    Quaternion,
    Semidihedral,
    Modular,
    Elementary,
    SemidirectPq,
    PermutationNamed,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Cyclic,
        Family::Abelian,
        Family::Dihedral,
        Family::Quaternion,
        Family::Semidihedral,
        Family::Modular,
        Family::Elementary,
        Family::SemidirectPq,
        Family::PermutationNamed,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Abelian => "abelian",
            Family::Dihedral => "dihedral",
            Family::Quaternion => "quaternion",
            Family::Semidihedral => "semidihedral",
            Family::Modular => "modular",
            Family::Elementary => "elementary",
            Family::SemidirectPq => "semidirect_pq",
            Family::PermutationNamed => "permutation_named",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// What to generate: order cap plus the families to include.
#[derive(Debug, Clone)]
pub struct CatalogSpec {
    pub max_order: usize,
    pub families: BTreeSet<Family>,
}

impl CatalogSpec {
    pub fn all(max_order: usize) -> Self {
        CatalogSpec {
            max_order,
            families: Family::ALL.into_iter().collect(),
        }
    }
}

/// Generate the catalog: deterministic, sorted by (order, label), and
/// duplicate-free by (order, label).
pub fn generate(spec: &CatalogSpec) -> Result<Vec<FiniteGroup>, GroupError> {
    let max = spec.max_order;
    let mut out: Vec<FiniteGroup> = Vec::new();

    for family in &spec.families {
        match family {
            Family::Cyclic => {
                for n in 1..=max {
                    out.push(groups::cyclic(n)?);
                }
            }
            Family::Abelian => {
                for factors in prime_power_multisets(max) {
                    out.push(groups::abelian(&factors)?);
                }
            }
            Family::Dihedral => {
                let mut order = 6;
                while order <= max {
                    out.push(groups::dihedral(order)?);
                    order += 2;
                }
            }
            Family::Quaternion => {
                let mut order = 8;
                while order <= max {
                    out.push(groups::generalized_quaternion(order)?);
                    order *= 2;
                }
            }
            Family::Semidihedral => {
                let mut order = 16;
                while order <= max {
                    out.push(groups::semidihedral(order)?);
                    order *= 2;
                }
            }
            Family::Modular => {
                for p in (2..=max).filter(|&p| numth::is_prime(p as u64)) {
                    // M_8 coincides with D_8, so 2-groups start at 16.
                    let start: u32 = if p == 2 { 4 } else { 3 };
                    let mut n = start;
                    while (p as u64).pow(n) <= max as u64 {
                        out.push(groups::modular(p, n)?);
                        n += 1;
                    }
                }
            }
            Family::Elementary => {
                let mut k = 1;
                while 1usize << k <= max {
                    out.push(groups::elementary_abelian(2, k as u32)?);
                    k += 1;
                }
            }
            Family::SemidirectPq => {
                for q in (3..=max).filter(|&q| numth::is_prime(q as u64)) {
                    for p in (2..q).filter(|&p| numth::is_prime(p as u64)) {
                        if (q - 1) % p != 0 || p * q > max {
                            continue;
                        }
                        let k = (2..q)
                            .find(|&k| numth::pow_mod(k as u64, p as u64, q as u64) == 1)
                            .expect("the unit group mod q has an element of order p");
                        out.push(groups::semidirect_cyclic(q, p, k)?);
                    }
                }
            }
            Family::PermutationNamed => {
                for (degree, order) in [(3, 6), (4, 24), (5, 120)] {
                    if order <= max {
                        out.push(groups::symmetric(degree)?);
                    }
                }
                for (degree, order) in [(4, 12), (5, 60)] {
                    if order <= max {
                        out.push(groups::alternating(degree)?);
                    }
                }
            }
        }
    }

    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.label().cmp(b.label()))
    });
    out.dedup_by(|a, b| a.order() == b.order() && a.label() == b.label());
    Ok(out)
}

/// All multisets of prime powers (each >= 2) with product <= max, each
/// sorted (prime ascending, exponent descending) for a canonical label.
fn prime_power_multisets(max: usize) -> Vec<Vec<usize>> {
    let mut prime_powers: Vec<(u64, u32, usize)> = Vec::new(); // (p, e, p^e)
    for p in (2..=max).filter(|&p| numth::is_prime(p as u64)) {
        let mut v = p;
        let mut e = 1;
        while v <= max {
            prime_powers.push((p as u64, e, v));
            match v.checked_mul(p) {
                Some(next) => v = next,
                None => break,
            }
            e += 1;
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    enumerate_multisets(&prime_powers, max, 0, 1, &mut stack, &mut out);
    for factors in &mut out {
        factors.sort_by(|&a, &b| {
            let fa = numth::factorize(a as u64).expect("prime power");
            let fb = numth::factorize(b as u64).expect("prime power");
            let (pa, ea) = fa.pairs()[0];
            let (pb, eb) = fb.pairs()[0];
            pa.cmp(&pb).then(eb.cmp(&ea))
        });
    }
    out.sort();
    out
}

fn enumerate_multisets(
    prime_powers: &[(u64, u32, usize)],
    max: usize,
    from: usize,
    product: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if !stack.is_empty() {
        out.push(stack.clone());
    }
    for i in from..prime_powers.len() {
        let value = prime_powers[i].2;
        if let Some(next) = product.checked_mul(value) {
            if next <= max {
                stack.push(value);
                enumerate_multisets(prime_powers, max, i, next, stack, out);
                stack.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn families(list: &[Family]) -> BTreeSet<Family> {
        list.iter().copied().collect()
    }

    #[test]
    fn parse_and_render_roundtrip() {
        for text in [
            "Z12",
            "Z2xZ2xZ3",
            "D8",
            "Q16",
            "SD16",
            "M27",
            "E8",
            "Z7:Z3(2)",
            "S4",
            "A5",
            "Z7:Z3(2)xZ2",
            "file:tables/g.tbl",
        ] {
            let d = GroupDescriptor::parse(text).unwrap();
            assert_eq!(d.render(), text);
            let again = GroupDescriptor::parse(&d.render()).unwrap();
            assert_eq!(again, d);
        }
        // lowercase input canonicalizes to uppercase
        assert_eq!(GroupDescriptor::parse("z12").unwrap().render(), "Z12");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match GroupDescriptor::parse("Z12xQ12") {
            Err(CatalogError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(GroupDescriptor::parse("").is_err());
        assert!(GroupDescriptor::parse("Z12x").is_err());
        assert!(GroupDescriptor::parse("X5").is_err());
        assert!(GroupDescriptor::parse("Z6:Z2(2)").is_err()); // not a unit mod 6
        assert!(GroupDescriptor::parse("Z7:Z3(3)").is_err()); // 3^3 is not 1 mod 7
        assert!(GroupDescriptor::parse("M12").is_err());
        assert!(GroupDescriptor::parse("E6").is_err());
        assert!(GroupDescriptor::parse("S9").is_err());
    }

    #[test]
    fn built_labels_match_descriptors() {
        for text in ["Z12", "Z4xZ2xZ3", "D8", "Q16", "E8", "Z7:Z3(2)", "S4"] {
            let g = GroupDescriptor::parse(text).unwrap().build().unwrap();
            assert_eq!(g.label(), text);
        }
    }

    #[test]
    fn cyclic_catalog() {
        let spec = CatalogSpec {
            max_order: 8,
            families: families(&[Family::Cyclic]),
        };
        let cat = generate(&spec).unwrap();
        assert_eq!(cat.len(), 8);
        assert_eq!(cat[0].label(), "Z1");
        assert_eq!(cat[7].label(), "Z8");
    }

    #[test]
    fn quaternion_catalog_at_8() {
        let spec = CatalogSpec {
            max_order: 8,
            families: families(&[Family::Quaternion]),
        };
        let cat = generate(&spec).unwrap();
        assert_eq!(cat.len(), 1);
        assert_eq!(cat[0].label(), "Q8");
    }

    #[test]
    fn quaternion_and_elementary_at_8() {
        let spec = CatalogSpec {
            max_order: 8,
            families: families(&[Family::Quaternion, Family::Elementary]),
        };
        let labels: Vec<String> = generate(&spec).unwrap().iter().map(|g| g.label().to_string()).collect();
        assert_eq!(labels, ["E2", "E4", "E8", "Q8"]);
    }

    #[test]
    fn semidirect_catalog_to_21() {
        let spec = CatalogSpec {
            max_order: 21,
            families: families(&[Family::SemidirectPq]),
        };
        let labels: Vec<String> = generate(&spec).unwrap().iter().map(|g| g.label().to_string()).collect();
        // S3, D10, D14 and the Frobenius group of order 21, as Zq:Zp forms.
        assert_eq!(labels, ["Z3:Z2(2)", "Z5:Z2(4)", "Z7:Z2(6)", "Z7:Z3(2)"]);
    }

    #[test]
    fn abelian_multisets_canonical() {
        let spec = CatalogSpec {
            max_order: 12,
            families: families(&[Family::Abelian]),
        };
        let labels: Vec<String> = generate(&spec).unwrap().iter().map(|g| g.label().to_string()).collect();
        assert!(labels.contains(&"Z4xZ2".to_string()));
        assert!(labels.contains(&"Z2xZ2xZ3".to_string()));
        assert!(labels.contains(&"Z4xZ3".to_string()));
        assert!(!labels.contains(&"Z3xZ4".to_string()));
        assert!(!labels.contains(&"Z2xZ4".to_string()));
    }

    #[test]
    fn catalog_labels_are_valid_descriptors() {
        for g in generate(&CatalogSpec::all(40)).unwrap() {
            let d = GroupDescriptor::parse(g.label()).unwrap();
            let rebuilt = d.build().unwrap();
            assert_eq!(rebuilt.label(), g.label());
            assert_eq!(rebuilt.order(), g.order());
        }
    }

    #[test]
    fn catalog_is_idempotent_and_duplicate_free() {
        let spec = CatalogSpec::all(40);
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        let keys = |cat: &[FiniteGroup]| {
            cat.iter()
                .map(|g| (g.order(), g.label().to_string()))
                .collect::<Vec<_>>()
        };
        assert_eq!(keys(&a), keys(&b));
        let mut k = keys(&a);
        k.dedup();
        assert_eq!(k.len(), a.len());
        assert!(a.windows(2).all(|w| w[0].order() <= w[1].order()));
    }

    #[test]
    fn trivial_catalog() {
        let spec = CatalogSpec::all(1);
        let cat = generate(&spec).unwrap();
        assert_eq!(cat.len(), 1);
        assert_eq!(cat[0].label(), "Z1");
    }
}

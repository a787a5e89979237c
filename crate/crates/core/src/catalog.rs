//! Fixed permutation realizations of standard group families, a small spec
//! language for naming them, and the group file format.
//!
//! | spec                      | group                          | action                              |
//! |---------------------------|--------------------------------|-------------------------------------|
//! | `cyclic:n`                | C_n                            | one n-cycle                         |
//! | `dihedral:2n`             | D_2n, order 2n                 | n-cycle and `i -> -i` on n points   |
//! | `dicyclic:4n`             | Dic_4n (`dicyclic:8` = Q8)     | regular, degree 4n                  |
//! | `symmetric:n`             | S_n                            | n-cycle and `(0 1)`                 |
//! | `alternating:n`           | A_n                            | 3-cycles `(0 1 i)`                  |
//! | `elementary_abelian:p^k`  | C_p^k                          | k disjoint p-cycles                 |
//! | `metacyclic:m,k`          | C_m ⋊ C_k                      | `x -> r x + 1` on Z_m               |
//! | `sl2:p`                   | SL(2, p)                       | nonzero vectors of F_p^2            |
//! | `heisenberg:p`            | p^{1+2} of exponent p, p odd   | regular, degree p^3                 |
//! | `heisenberg_c3:p`         | p^{1+2} ⋊ C_3, p odd           | regular, degree 3 p^3               |
//! | `perm:n:g1;g2;..`         | generated by cycle notation    | given                               |
//!
//! Specs joined by ` x ` denote a direct product acting on disjoint supports.
//! For `metacyclic:m,k`, `r` is the least unit of Z_m of multiplicative order k.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;

/// A group given by a family name and parameters, or by explicit generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian { p: usize, k: usize },
    Metacyclic { m: usize, k: usize },
    Sl2(usize),
    Heisenberg(usize),
    HeisenbergC3(usize),
    Perm { degree: usize, generators: Vec<Permutation> },
    DirectProduct(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(DEFAULT_ORDER_CAP)
    }

    /// Realizes the spec as a permutation group; fails if its order would exceed `cap`.
    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        let (degree, gens) = self.realize(cap)?;
        FiniteGroup::enumerate_with_cap(degree, gens, cap)
    }

    /// Expected order, where it is cheap to know in advance.
    fn order_hint(&self) -> Option<u128> {
        let n = |x: usize| x as u128;
        Some(match self {
            GroupSpec::Cyclic(m) | GroupSpec::Dihedral(m) | GroupSpec::Dicyclic(m) => n(*m),
            GroupSpec::Symmetric(m) => (1..=n(*m)).try_fold(1u128, |a, b| a.checked_mul(b))?,
            GroupSpec::Alternating(m) => (3..=n(*m)).try_fold(1u128, |a, b| a.checked_mul(b))?,
            GroupSpec::ElementaryAbelian { p, k } => n(*p).checked_pow(u32::try_from(*k).ok()?)?,
            GroupSpec::Metacyclic { m, k } => n(*m) * n(*k),
            GroupSpec::Sl2(p) => n(*p) * (n(*p) * n(*p) - 1),
            GroupSpec::Heisenberg(p) => n(*p).pow(3),
            GroupSpec::HeisenbergC3(p) => 3 * n(*p).pow(3),
            GroupSpec::Perm { .. } => return None,
            GroupSpec::DirectProduct(parts) => parts
                .iter()
                .map(|s| s.order_hint())
                .try_fold(1u128, |a, b| a.checked_mul(b?))?,
        })
    }

    fn realize(&self, cap: usize) -> Result<(usize, Vec<Permutation>)> {
        if let Some(order) = self.order_hint() {
            if order > cap as u128 {
                return Err(Error::OrderCapExceeded { cap });
            }
        }
        match self {
            GroupSpec::Cyclic(n) => cyclic_gens(*n),
            GroupSpec::Dihedral(n) => dihedral_gens(*n),
            GroupSpec::Dicyclic(n) => {
                check_dicyclic(*n)?;
                let m = n / 4;
                let mul = move |a, b| dicyclic_mul(m, a, b);
                Ok((*n, regular_gens(*n, &[1, 2 * m], mul)?))
            }
            GroupSpec::Symmetric(n) => symmetric_gens(*n),
            GroupSpec::Alternating(n) => alternating_gens(*n),
            GroupSpec::ElementaryAbelian { p, k } => elementary_abelian_gens(*p, *k),
            GroupSpec::Metacyclic { m, k } => metacyclic_gens(*m, *k),
            GroupSpec::Sl2(p) => sl2_gens(*p),
            GroupSpec::Heisenberg(p) => {
                check_odd_prime(*p)?;
                let p = *p;
                let order = p * p * p;
                Ok((order, regular_gens(order, &[1, p], |a, b| heisenberg_mul(p, a, b))?))
            }
            GroupSpec::HeisenbergC3(p) => {
                check_odd_prime(*p)?;
                let p = *p;
                let order = 3 * p * p * p;
                let gens = [1, p, p * p * p];
                Ok((order, regular_gens(order, &gens, |a, b| heisenberg_c3_mul(p, a, b))?))
            }
            GroupSpec::Perm { degree, generators } => Ok((*degree, generators.clone())),
            GroupSpec::DirectProduct(parts) => {
                let realized = parts
                    .iter()
                    .map(|s| s.realize(cap))
                    .collect::<Result<Vec<_>>>()?;
                let degree = realized.iter().map(|(d, _)| d).sum();
                let mut gens = Vec::new();
                let mut offset = 0;
                for (d, g) in realized {
                    gens.extend(g.iter().map(|x| x.shifted(offset, degree)));
                    offset += d;
                }
                Ok((degree, gens))
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alternating:{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "elementary_abelian:{p}^{k}"),
            GroupSpec::Metacyclic { m, k } => write!(f, "metacyclic:{m},{k}"),
            GroupSpec::Sl2(p) => write!(f, "sl2:{p}"),
            GroupSpec::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            GroupSpec::HeisenbergC3(p) => write!(f, "heisenberg_c3:{p}"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "perm:{degree}:")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupSpec::DirectProduct(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

/// Parses a one-line spec such as `dihedral:8` or `cyclic:2 x symmetric:3`.
/// Errors report line 1 and a 1-based column.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut parts = Vec::new();
    let mut start = 0;
    for piece in text.split(" x ") {
        let lead = piece.len() - piece.trim_start().len();
        parts.push(parse_factor(piece.trim(), start + lead + 1)?);
        start += piece.len() + 3;
    }
    Ok(if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        GroupSpec::DirectProduct(parts)
    })
}

fn parse_factor(text: &str, column: usize) -> Result<GroupSpec> {
    let Some((family, rest)) = text.split_once(':') else {
        return Err(Error::parse(1, column, "expected `family:parameters`"));
    };
    let pcol = column + family.chars().count() + 1;
    let number = |s: &str, col: usize| -> Result<usize> {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(1, col, format!("expected a number, found `{s}`")))
    };
    let pair = |sep: char| -> Result<(usize, usize)> {
        let Some((a, b)) = rest.split_once(sep) else {
            return Err(Error::parse(1, pcol, format!("expected `a{sep}b`")));
        };
        Ok((number(a, pcol)?, number(b, pcol + a.len() + 1)?))
    };
    let spec = match family.trim() {
        "cyclic" => GroupSpec::Cyclic(number(rest, pcol)?),
        "dihedral" => GroupSpec::Dihedral(number(rest, pcol)?),
        "dicyclic" => GroupSpec::Dicyclic(number(rest, pcol)?),
        "symmetric" => GroupSpec::Symmetric(number(rest, pcol)?),
        "alternating" => GroupSpec::Alternating(number(rest, pcol)?),
        "elementary_abelian" => {
            let (p, k) = pair('^')?;
            GroupSpec::ElementaryAbelian { p, k }
        }
        "metacyclic" => {
            let (m, k) = pair(',')?;
            GroupSpec::Metacyclic { m, k }
        }
        "sl2" => GroupSpec::Sl2(number(rest, pcol)?),
        "heisenberg" => GroupSpec::Heisenberg(number(rest, pcol)?),
        "heisenberg_c3" => GroupSpec::HeisenbergC3(number(rest, pcol)?),
        "perm" => {
            let Some((deg, gens)) = rest.split_once(':') else {
                return Err(Error::parse(1, pcol, "expected `perm:degree:generators`"));
            };
            let degree = number(deg, pcol)?;
            let mut col = pcol + deg.len() + 1;
            let mut generators = Vec::new();
            for g in gens.split(';') {
                if !g.trim().is_empty() {
                    generators.push(Permutation::parse_cycles_at(degree, g, 1, col)?);
                }
                col += g.chars().count() + 1;
            }
            GroupSpec::Perm { degree, generators }
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    Ok(spec)
}

/// Parses a group file: the first non-blank line is `degree: n`, each further
/// non-blank line one generator in cycle notation. Lines starting with `#` are ignored.
pub fn parse_group_file(text: &str) -> Result<GroupSpec> {
    let mut degree = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let lead = raw.len() - raw.trim_start().len();
        match degree {
            None => {
                let Some(value) = trimmed.strip_prefix("degree:") else {
                    return Err(Error::parse(line, lead + 1, "expected `degree: n`"));
                };
                let col = lead + 1 + "degree:".len();
                degree = Some(value.trim().parse::<usize>().map_err(|_| {
                    Error::parse(line, col + 1, format!("invalid degree `{}`", value.trim()))
                })?);
            }
            Some(d) => generators.push(Permutation::parse_cycles_at(d, raw, line, 1)?),
        }
    }
    match degree {
        Some(degree) => Ok(GroupSpec::Perm { degree, generators }),
        None => Err(Error::parse(1, 1, "missing `degree: n` line")),
    }
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    GroupSpec::Cyclic(n).build()
}

/// Dihedral group of the given order (`dihedral(8)` has order 8).
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    GroupSpec::Dihedral(order).build()
}

/// Dicyclic group of the given order; `dicyclic(8)` is the quaternion group.
pub fn dicyclic(order: usize) -> Result<FiniteGroup> {
    GroupSpec::Dicyclic(order).build()
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    GroupSpec::Symmetric(n).build()
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    GroupSpec::Alternating(n).build()
}

pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    GroupSpec::ElementaryAbelian { p, k }.build()
}

pub fn metacyclic(m: usize, k: usize) -> Result<FiniteGroup> {
    GroupSpec::Metacyclic { m, k }.build()
}

pub fn sl2(p: usize) -> Result<FiniteGroup> {
    GroupSpec::Sl2(p).build()
}

pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    GroupSpec::Heisenberg(p).build()
}

pub fn heisenberg_c3(p: usize) -> Result<FiniteGroup> {
    GroupSpec::HeisenbergC3(p).build()
}

pub fn direct_product(parts: Vec<GroupSpec>) -> Result<FiniteGroup> {
    GroupSpec::DirectProduct(parts).build()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidPermutation(msg.into())
}

fn cycle_on(degree: usize, points: impl IntoIterator<Item = usize>) -> Result<Permutation> {
    Permutation::from_cycles(degree, &[points.into_iter().collect()])
}

fn cyclic_gens(n: usize) -> Result<(usize, Vec<Permutation>)> {
    if n == 0 {
        return Err(invalid("cyclic group order must be positive"));
    }
    Ok((n, vec![cycle_on(n, 0..n)?]))
}

fn dihedral_gens(order: usize) -> Result<(usize, Vec<Permutation>)> {
    match order {
        2 => Ok((2, vec![cycle_on(2, 0..2)?])),
        4 => Ok((4, vec![cycle_on(4, 0..2)?, cycle_on(4, 2..4)?])),
        o if o >= 6 && o % 2 == 0 => {
            let n = o / 2;
            let rotation = cycle_on(n, 0..n)?;
            let reflection =
                Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
            Ok((n, vec![rotation, reflection]))
        }
        _ => Err(invalid(format!("dihedral group order must be even, got {order}"))),
    }
}

fn check_dicyclic(order: usize) -> Result<()> {
    if order < 8 || !order.is_multiple_of(4) {
        return Err(invalid(format!(
            "dicyclic group order must be a multiple of 4 and at least 8, got {order}"
        )));
    }
    Ok(())
}

/// Elements `a^i x^j` (0 <= i < 2m, j in {0,1}) indexed `i + 2m j`, with
/// `x a = a^-1 x` and `x^2 = a^m`.
fn dicyclic_mul(m: usize, a: usize, b: usize) -> usize {
    let n = 2 * m;
    let (i, j) = (a % n, a / n);
    let (k, l) = (b % n, b / n);
    // a^i x^j a^k x^l = a^(i ± k) x^(j + l)
    let i = if j == 0 { (i + k) % n } else { (i + n - k) % n };
    if j + l == 2 {
        (i + m) % n
    } else {
        i + n * (j + l)
    }
}

fn regular_gens(
    order: usize,
    generators: &[usize],
    mul: impl Fn(usize, usize) -> usize,
) -> Result<Vec<Permutation>> {
    generators
        .iter()
        .map(|&g| Permutation::from_images((0..order).map(|x| mul(x, g) as u32).collect()))
        .collect()
}

fn symmetric_gens(n: usize) -> Result<(usize, Vec<Permutation>)> {
    match n {
        0 => Err(invalid("symmetric group degree must be positive")),
        1 => Ok((1, vec![])),
        2 => Ok((2, vec![cycle_on(2, 0..2)?])),
        _ => Ok((n, vec![cycle_on(n, 0..n)?, cycle_on(n, 0..2)?])),
    }
}

fn alternating_gens(n: usize) -> Result<(usize, Vec<Permutation>)> {
    if n == 0 {
        return Err(invalid("alternating group degree must be positive"));
    }
    let gens = (2..n)
        .map(|i| cycle_on(n, [0, 1, i]))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, gens))
}

fn elementary_abelian_gens(p: usize, k: usize) -> Result<(usize, Vec<Permutation>)> {
    if !crate::subgroup::is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    let degree = p * k;
    let gens = (0..k)
        .map(|j| cycle_on(degree, j * p..(j + 1) * p))
        .collect::<Result<Vec<_>>>()?;
    Ok((degree, gens))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn multiplicative_order(r: usize, m: usize) -> usize {
    let mut x = r % m;
    let mut k = 1;
    while x != 1 % m {
        x = x * r % m;
        k += 1;
    }
    k
}

fn metacyclic_gens(m: usize, k: usize) -> Result<(usize, Vec<Permutation>)> {
    if m < 2 || k == 0 {
        return Err(invalid("metacyclic parameters must satisfy m >= 2, k >= 1"));
    }
    let r = (1..m)
        .find(|&r| gcd(r, m) == 1 && multiplicative_order(r, m) == k)
        .ok_or_else(|| invalid(format!("Z_{m} has no unit of order {k}")))?;
    let translation = cycle_on(m, 0..m)?;
    let scaling = Permutation::from_images((0..m).map(|x| (r * x % m) as u32).collect())?;
    Ok((m, vec![translation, scaling]))
}

fn check_odd_prime(p: usize) -> Result<()> {
    if p == 2 || !crate::subgroup::is_prime(p) {
        return Err(invalid(format!("{p} is not an odd prime")));
    }
    Ok(())
}

fn sl2_gens(p: usize) -> Result<(usize, Vec<Permutation>)> {
    if !crate::subgroup::is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    let degree = p * p - 1;
    // Nonzero vector (x, y) is point x + p y - 1.
    let act = |m: [usize; 4]| {
        Permutation::from_images(
            (1..p * p)
                .map(|v| {
                    let (x, y) = (v % p, v / p);
                    let nx = (m[0] * x + m[1] * y) % p;
                    let ny = (m[2] * x + m[3] * y) % p;
                    (nx + p * ny - 1) as u32
                })
                .collect(),
        )
    };
    Ok((degree, vec![act([1, 1, 0, 1])?, act([0, p - 1, 1, 0])?]))
}

/// `(v, z)(v', z') = (v + v', z + z' + ω(v, v')/2)` with `ω` the standard
/// symplectic form; `(v1, v2, z)` is indexed `v1 + p v2 + p^2 z`.
fn heisenberg_mul(p: usize, a: usize, b: usize) -> usize {
    let (a1, a2, az) = (a % p, a / p % p, a / (p * p));
    let (b1, b2, bz) = (b % p, b / p % p, b / (p * p));
    let half = p.div_ceil(2);
    let omega = (a1 * b2 + p * p - a2 * b1 % p) % p;
    let z = (az + bz + half * omega) % p;
    (a1 + b1) % p + p * ((a2 + b2) % p) + p * p * z
}

/// `(v, z) ↦ (M v, z)` with `M = [[0, -1], [1, -1]]` of order 3 and determinant 1.
fn heisenberg_rotate(p: usize, a: usize) -> usize {
    let (x, y, z) = (a % p, a / p % p, a / (p * p));
    let nx = (p - y) % p;
    let ny = (x + p - y) % p;
    nx + p * ny + p * p * z
}

/// Semidirect product of the Heisenberg group with C3 = ⟨M⟩; element `(h, c)` is indexed `h + p^3 c`.
fn heisenberg_c3_mul(p: usize, a: usize, b: usize) -> usize {
    let q = p * p * p;
    let (ha, ca) = (a % q, a / q);
    let (mut hb, cb) = (b % q, b / q);
    for _ in 0..ca {
        hb = heisenberg_rotate(p, hb);
    }
    heisenberg_mul(p, ha, hb) + q * ((ca + cb) % 3)
}

/// Groups used throughout the test and acceptance suites: every family above
/// up to order 48, C_n for n <= 30, and a handful of odd-order groups.
pub fn standard_corpus() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut corpus: Vec<GroupSpec> = (1..=30).map(Cyclic).collect();
    corpus.extend((2..=48).step_by(2).map(Dihedral));
    corpus.extend((8..=48).step_by(4).map(Dicyclic));
    corpus.extend((3..=4).map(Symmetric));
    corpus.push(Alternating(4));
    for (p, k) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)] {
        corpus.push(ElementaryAbelian { p, k });
    }
    corpus.push(Sl2(3));
    for (m, k) in [(7, 3), (9, 3), (13, 3), (5, 4), (7, 6)] {
        corpus.push(Metacyclic { m, k });
    }
    corpus.push(Heisenberg(3));
    let products: [&[GroupSpec]; 9] = [
        &[Cyclic(2), Symmetric(3)],
        &[Cyclic(3), Symmetric(3)],
        &[Cyclic(2), Dihedral(8)],
        &[Cyclic(2), Dicyclic(8)],
        &[Cyclic(3), Dicyclic(8)],
        &[Cyclic(2), Alternating(4)],
        &[Symmetric(3), Symmetric(3)],
        &[Cyclic(2), Symmetric(4)],
        &[Cyclic(4), Cyclic(2)],
    ];
    corpus.extend(products.iter().map(|p| DirectProduct(p.to_vec())));
    corpus
}

/// Odd-order non-abelian groups below order 375, all normally monomial.
pub fn odd_order_corpus() -> Vec<GroupSpec> {
    use GroupSpec::*;
    vec![
        Metacyclic { m: 7, k: 3 },
        Heisenberg(3),
        Metacyclic { m: 9, k: 3 },
        Metacyclic { m: 13, k: 3 },
        Metacyclic { m: 11, k: 5 },
        Metacyclic { m: 19, k: 3 },
        DirectProduct(vec![Metacyclic { m: 7, k: 3 }, Cyclic(3)]),
        Heisenberg(5),
        Metacyclic { m: 49, k: 3 },
        DirectProduct(vec![Heisenberg(3), Cyclic(5)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        let cases = [
            ("cyclic:1", 1),
            ("cyclic:12", 12),
            ("dihedral:2", 2),
            ("dihedral:4", 4),
            ("dihedral:10", 10),
            ("dicyclic:8", 8),
            ("dicyclic:12", 12),
            ("symmetric:1", 1),
            ("symmetric:4", 24),
            ("alternating:3", 3),
            ("alternating:5", 60),
            ("elementary_abelian:2^3", 8),
            ("metacyclic:7,3", 21),
            ("sl2:3", 24),
            ("heisenberg:3", 27),
            ("heisenberg_c3:5", 375),
            ("cyclic:2 x symmetric:3", 12),
            ("perm:5:(0 1 2 3 4);(1 4)(2 3)", 10),
        ];
        for (spec, order) in cases {
            let g = parse_spec(spec).unwrap().build().unwrap();
            assert_eq!(g.order(), order, "{spec}");
        }
    }

    #[test]
    fn dicyclic_is_not_dihedral() {
        let q8 = dicyclic(8).unwrap();
        let d8 = dihedral(8).unwrap();
        let involutions = |g: &FiniteGroup| (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions(&q8), 1);
        assert_eq!(involutions(&d8), 5);
        assert!(!q8.is_abelian());
        assert_eq!(q8.center().order(), 2);
    }

    #[test]
    fn heisenberg_centres() {
        let h = heisenberg(3).unwrap();
        assert_eq!(h.center().order(), 3);
        assert!((0..27).all(|x| x == 0 || h.element_order(x) == 3));
        let g = heisenberg_c3(5).unwrap();
        assert_eq!(g.center().order(), 5);
    }

    #[test]
    fn spec_round_trips() {
        for spec in standard_corpus().into_iter().chain(odd_order_corpus()) {
            assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            parse_spec("tetrahedral:4"),
            Err(Error::UnknownFamily("tetrahedral".into()))
        );
        match parse_spec("cyclic:x") {
            Err(Error::Parse { line: 1, column: 8, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_spec("perm:3:(0 1);(0 5)") {
            Err(Error::Parse { line: 1, column: 17, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_spec("symmetric:9").unwrap().build(),
            Err(Error::OrderCapExceeded { .. })
        ));
        assert!(parse_spec("dihedral:7").unwrap().build().is_err());
    }

    #[test]
    fn group_files() {
        let g = parse_group_file("degree: 5\n(0 1 2 3 4)\n(1 4)(2 3)\n")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(g.order(), 10);
        match parse_group_file("degree: 4\n(0 1)\n(0 1 9)\n") {
            Err(Error::Parse { line: 3, column: 6, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_group_file("\n  deg 4\n") {
            Err(Error::Parse { line: 2, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}

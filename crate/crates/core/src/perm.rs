//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Products compose left to right: `(a * b)(i) = b(a(i))`, so `a * b` applies
//! `a` first. Cycle notation uses 0-based points, e.g. `(0 1 2)(3 4)`; points
//! may be separated by spaces or commas.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking that it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let p = p as usize;
            if p >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {p} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("image {p} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from a list of disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[p], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears in more than one cycle position"
                    )));
                }
                images[p] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`. The empty string and `()` denote the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        Self::parse_cycles_at(degree, text, 1, 1)
    }

    /// As [`Permutation::parse_cycles`], reporting errors relative to the given line and column.
    pub fn parse_cycles_at(degree: usize, text: &str, line: usize, col0: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut chars = text.char_indices().peekable();
        while let Some((pos, c)) = chars.next() {
            let column = col0 + text[..pos].chars().count();
            match c {
                '(' => {
                    if current.is_some() {
                        return Err(Error::parse(line, column, "nested `(`"));
                    }
                    current = Some(Vec::new());
                }
                ')' => match current.take() {
                    Some(cycle) => {
                        if !cycle.is_empty() {
                            cycles.push(cycle);
                        }
                    }
                    None => return Err(Error::parse(line, column, "unmatched `)`")),
                },
                c if c.is_ascii_digit() => {
                    let mut end = pos + c.len_utf8();
                    while let Some(&(p, d)) = chars.peek() {
                        if d.is_ascii_digit() {
                            end = p + d.len_utf8();
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let point: usize = text[pos..end]
                        .parse()
                        .map_err(|_| Error::parse(line, column, "point index too large"))?;
                    if point >= degree {
                        return Err(Error::parse(
                            line,
                            column,
                            format!("point {point} out of range for degree {degree}"),
                        ));
                    }
                    match current.as_mut() {
                        Some(cycle) => cycle.push(point),
                        None => return Err(Error::parse(line, column, "point outside a cycle")),
                    }
                }
                ',' | ' ' | '\t' => {}
                other => {
                    return Err(Error::parse(
                        line,
                        column,
                        format!("unexpected character `{other}`"),
                    ))
                }
            }
        }
        if current.is_some() {
            let column = col0 + text.chars().count();
            return Err(Error::parse(line, column, "unterminated cycle"));
        }
        Self::from_cycles(degree, &cycles).map_err(|e| match e {
            Error::InvalidPermutation(msg) => Error::parse(line, col0, msg),
            other => other,
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Embeds the permutation into a larger degree, shifting its support by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &p) in self.images.iter().enumerate() {
            images[i + offset] = p + offset as u32;
        }
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles(6, "(0 1 2)(3,4)").unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3, 5]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::parse_cycles(3, "()").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn composition_applies_left_factor_first() {
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).image(0), 2);
        assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Permutation::parse_cycles_at(4, "(0 1)(2 9)", 3, 1) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 3);
                assert_eq!(column, 9);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(Permutation::parse_cycles(4, "(0 1").is_err());
        assert!(Permutation::parse_cycles(4, "0 1)").is_err());
        assert!(Permutation::parse_cycles(4, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(4, "(0 x)").is_err());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_images(vec![1, 0]).is_ok());
    }
}

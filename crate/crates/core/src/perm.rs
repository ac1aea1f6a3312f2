//! Permutation arithmetic and text formats.
//!
//! Points are 1-based everywhere (matching the block notation used in the
//! catalog), and a permutation's degree is fixed at construction: fixed
//! points at the top of the range survive round-trips. The composition
//! convention is left-to-right, i.e. `compose(p, q)` maps `x` to `q(p(x))`
//! so that exponent-style orbits `B^g` read naturally.

use std::fmt;

use thiserror::Error;

/// 1-based point of a permutation domain.
pub type Point = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears twice")]
    RepeatedPoint(usize),
    #[error("image list is not a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("malformed permutation text: {0}")]
    Malformed(String),
}

/// A bijection of `{1..d}` stored as an image table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[i] is the (1-based) image of point i+1
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree as u32).collect(),
        }
    }

    /// Builds a permutation from a 1-based image table, checking bijectivity.
    pub fn from_images(images: &[Point]) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &im in images {
            if im == 0 || im > degree {
                return Err(PermError::PointOutOfRange {
                    point: im,
                    degree,
                });
            }
            if seen[im - 1] {
                return Err(PermError::NotBijection(degree));
            }
            seen[im - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u32).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<Point>], degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (1..=degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if seen[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                seen[p - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i];
                let to = cycle[(i + 1) % cycle.len()];
                images[from - 1] = to as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the point `x` (1-based).
    #[inline]
    pub fn apply(&self, x: Point) -> Point {
        self.images[x - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| im as usize == i + 1)
    }

    /// Left-to-right composition: the result maps `x` to `q(p(x))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(self.mul(q))
    }

    /// Unchecked left-to-right composition for internal hot paths.
    #[inline]
    pub(crate) fn mul(&self, q: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), q.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&im| q.images[(im - 1) as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[(im - 1) as usize] = (i + 1) as u32;
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g` in left-to-right convention.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != g.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), g.degree()));
        }
        Ok(g.inverse().mul(self).mul(g))
    }

    /// Cycle decomposition, cycles of length >= 2, each starting at its
    /// smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_lcm(acc, c.len() as u64))
    }

    /// True if the permutation is even (product of an even number of transpositions).
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }

    pub fn to_image_string(&self) -> String {
        let inner: Vec<String> = self.images.iter().map(|p| p.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn num_lcm(a: u64, b: u64) -> u64 {
    a / num_gcd(a, b) * b
}

/// Parses either disjoint-cycle notation `(1,2,3)(4,5)` or an image list
/// `[2,3,1,5,4]`. Points absent from cycle notation are fixed; `()` is the
/// identity.
pub fn parse_perm(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(PermError::Malformed("empty string".to_string()));
    }
    if t.starts_with('[') {
        parse_image_list(t, degree)
    } else if t.starts_with('(') {
        parse_cycles(t, degree)
    } else {
        Err(PermError::Malformed(format!(
            "expected '(' or '[', got {t:?}"
        )))
    }
}

fn parse_image_list(t: &str, degree: usize) -> Result<Permutation, PermError> {
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| PermError::Malformed("unterminated image list".to_string()))?;
    let mut images = Vec::with_capacity(degree);
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(PermError::Malformed("empty entry in image list".to_string()));
        }
        let p: usize = part
            .parse()
            .map_err(|_| PermError::Malformed(format!("bad integer {part:?}")))?;
        images.push(p);
    }
    if images.len() != degree {
        return Err(PermError::Malformed(format!(
            "image list has {} entries, expected degree {degree}",
            images.len()
        )));
    }
    Permutation::from_images(&images)
}

fn parse_cycles(t: &str, degree: usize) -> Result<Permutation, PermError> {
    let mut cycles: Vec<Vec<Point>> = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let rest2 = rest.trim_start();
        if rest2.is_empty() {
            break;
        }
        if !rest2.starts_with('(') {
            return Err(PermError::Malformed(format!(
                "expected '(' in cycle notation, got {rest2:?}"
            )));
        }
        let close = rest2
            .find(')')
            .ok_or_else(|| PermError::Malformed("unterminated cycle".to_string()))?;
        let inner = &rest2[1..close];
        rest = &rest2[close + 1..];
        let inner = inner.trim();
        if inner.is_empty() {
            continue; // () is the identity cycle
        }
        let mut cyc = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            let p: usize = part
                .parse()
                .map_err(|_| PermError::Malformed(format!("bad integer {part:?}")))?;
            cyc.push(p);
        }
        cycles.push(cyc);
    }
    Permutation::from_cycles(&cycles, degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        parse_perm(text, degree).unwrap()
    }

    #[test]
    fn parse_identity() {
        let id = p("()", 5);
        assert!(id.is_identity());
        assert_eq!(id.degree(), 5);
    }

    #[test]
    fn parse_cycle_expansion() {
        let g = p("(1,2,3)(4,5)", 5);
        assert_eq!(g, p("[2,3,1,5,4]", 5));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            parse_perm("(1,2)(2,3)", 5),
            Err(PermError::RepeatedPoint(2))
        ));
        assert!(matches!(
            parse_perm("(1,7)", 5),
            Err(PermError::PointOutOfRange { point: 7, .. })
        ));
        assert!(parse_perm("[2,2,1]", 3).is_err());
        assert!(parse_perm("[2,3,1]", 4).is_err());
        assert!(parse_perm("1,2,3", 5).is_err());
    }

    #[test]
    fn compose_convention_left_to_right() {
        // (1,2) then (2,3): 1 -> 2 -> 3, so the composite is (1,3,2).
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        assert_eq!(a.compose(&b).unwrap(), p("(1,3,2)", 3));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let g = p("(1,4,2)(3,5)", 6);
        let id = Permutation::identity(6);
        assert_eq!(g.compose(&id).unwrap(), g);
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert!(g.inverse().compose(&g).unwrap().is_identity());
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(p("(1,2,3)", 3).inverse(), p("(1,3,2)", 3));
        assert!(Permutation::identity(4).inverse().is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(
            a.compose(&b).unwrap_err(),
            PermError::DegreeMismatch(3, 4)
        );
    }

    #[test]
    fn cycle_string_round_trip_keeps_fixed_top_point() {
        let g = p("(1,2)", 6);
        assert_eq!(parse_perm(&g.to_cycle_string(), 6).unwrap(), g);
        assert_eq!(parse_perm(&g.to_image_string(), 6).unwrap(), g);
        assert_eq!(g.degree(), 6);
    }

    #[test]
    fn parity_and_order() {
        assert!(p("(1,2,3)", 5).is_even());
        assert!(!p("(1,2)", 5).is_even());
        assert_eq!(p("(1,2)(3,4,5)", 5).order(), 6);
        assert_eq!(Permutation::identity(3).order(), 1);
    }
}

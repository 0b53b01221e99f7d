//! Permutations of `{1..n}` stored as image lists.
//!
//! Points are 1-based in every textual form (cycle notation, display) and
//! 0-based in the image list. Composition follows the right-action
//! convention: `p.compose(&q)` applies `p` first, then `q`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest supported degree. Images are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&degree), "degree out of range");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(n));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation from 1-based images (`images[i]` is the image of point `i+1`).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotBijection);
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_raw(images: Box<[u16]>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4 5)"` over points `1..=degree`.
    ///
    /// Points inside a cycle may be separated by spaces or commas. `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(degree));
        }
        let err = |pos: usize, msg: &str| Error::PermutationSyntax {
            pos,
            msg: msg.to_string(),
        };
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let bytes = text.as_bytes();
        let mut i = 0;
        let mut saw_cycle = false;
        while i < bytes.len() {
            match bytes[i] {
                b' ' | b'\t' | b'\n' | b'\r' => i += 1,
                b'(' => {
                    saw_cycle = true;
                    i += 1;
                    let mut cycle: Vec<usize> = Vec::new();
                    loop {
                        while i < bytes.len() && matches!(bytes[i], b' ' | b'\t' | b',') {
                            i += 1;
                        }
                        if i >= bytes.len() {
                            return Err(err(i, "unclosed '('"));
                        }
                        if bytes[i] == b')' {
                            i += 1;
                            break;
                        }
                        if !bytes[i].is_ascii_digit() {
                            return Err(err(i, "expected a point or ')'"));
                        }
                        let start = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        let point: usize = text[start..i]
                            .parse()
                            .map_err(|_| err(start, "point too large"))?;
                        if point == 0 || point > degree {
                            return Err(Error::PointOutOfRange { point, degree });
                        }
                        if used[point - 1] {
                            return Err(Error::RepeatedPoint(point));
                        }
                        used[point - 1] = true;
                        cycle.push(point - 1);
                    }
                    for (k, &p) in cycle.iter().enumerate() {
                        images[p] = cycle[(k + 1) % cycle.len()];
                    }
                }
                _ => return Err(err(i, "expected '('")),
            }
        }
        if !saw_cycle {
            return Err(err(0, "empty permutation text"));
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image list.
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// 1-based image list, matching cycle notation.
    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()].into_boxed_slice();
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        let mut out = vec![0u16; self.degree()].into_boxed_slice();
        for (i, &x) in self.images.iter().enumerate() {
            out[other.images[i] as usize] = other.images[x as usize];
        }
        Permutation { images: out }
    }

    /// `self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image(p);
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn pow(&self, mut exp: usize) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Same cycles on `offset + degree` points, shifted by `offset`.
    pub(crate) fn embed(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u16> = (0..total as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = (offset + x as usize) as u16;
        }
        Permutation::from_raw(images.into_boxed_slice())
    }
}

fn is_bijection(images: &[u16]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&x| {
        let x = x as usize;
        x < seen.len() && !std::mem::replace(&mut seen[x], true)
    })
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
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
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_three_cycle() {
        let p = Permutation::parse("(1 2 3)", 5).unwrap();
        assert_eq!(p.one_based_images(), vec![2, 3, 1, 4, 5]);
    }

    #[test]
    fn parse_identity() {
        let p = Permutation::parse("()", 3).unwrap();
        assert_eq!(p.one_based_images(), vec![1, 2, 3]);
        assert!(p.is_identity());
    }

    #[test]
    fn parse_disjoint_transpositions() {
        let p = Permutation::parse("(1 2)(3 4)", 4).unwrap();
        assert_eq!(p.one_based_images(), vec![2, 1, 4, 3]);
        let q = Permutation::parse("(1,2)(3,4)", 4).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse("(1 2 1)", 3),
            Err(Error::RepeatedPoint(1))
        ));
        assert!(matches!(
            Permutation::parse("(1 2)(2 3)", 3),
            Err(Error::RepeatedPoint(2))
        ));
        assert!(matches!(
            Permutation::parse("(1 4)", 3),
            Err(Error::PointOutOfRange { point: 4, degree: 3 })
        ));
        assert!(matches!(
            Permutation::parse("(1 2", 3),
            Err(Error::PermutationSyntax { .. })
        ));
        assert!(matches!(
            Permutation::parse("1 2)", 3),
            Err(Error::PermutationSyntax { .. })
        ));
        assert!(Permutation::parse("(0 1)", 3).is_err());
    }

    #[test]
    fn display_round_trip() {
        let p = Permutation::parse("(1 5 2)(3 4)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 5 2)(3 4)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn right_action_composition() {
        // (1 2) then (2 3) sends 1 -> 2 -> 3.
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        assert_eq!((&a * &b).to_string(), "(1 3 2)");
    }

    #[test]
    fn order_and_pow() {
        let p = Permutation::parse("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..12).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm()) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn conjugate_matches_definition(p in arb_perm(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut v: Vec<usize> = (0..p.degree()).collect();
            v.shuffle(&mut rng);
            let q = Permutation::from_images(v).unwrap();
            let expected = q.inverse().compose(&p).compose(&q);
            prop_assert_eq!(p.conjugate_by(&q), expected);
        }

        #[test]
        fn display_parses_back(p in arb_perm()) {
            let text = p.to_string();
            prop_assert_eq!(Permutation::parse(&text, p.degree()).unwrap(), p);
        }
    }
}

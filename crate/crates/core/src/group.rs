//! Elements of `Z_2^n`, which double as vertices of the n-cube.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::{Error, Result};

/// An element `a = (a_1, ..., a_n)` of `Z_2^n`, packed into a machine word.
///
/// Coordinate 1 is the most significant of the `n` low bits, so the packed
/// value is also the vertex index in lexicographic order of bit strings with
/// the zero element first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    bits: u64,
    n: u32,
}

impl GroupElement {
    pub const MAX_DIM: u32 = 64;

    pub fn new(n: u32, bits: u64) -> Result<Self> {
        check_dim(n)?;
        if n < 64 && bits >> n != 0 {
            return Err(Error::BitsOutOfRange { bits, n });
        }
        Ok(GroupElement { bits, n })
    }

    pub fn zero(n: u32) -> Result<Self> {
        Self::new(n, 0)
    }

    /// The unit vector `epsilon_i`, `i` in `1..=n`.
    pub fn unit(n: u32, i: u32) -> Result<Self> {
        check_dim(n)?;
        if i == 0 || i > n {
            return Err(Error::InvalidStepSet(format!("unit index {i} outside 1..={n}")));
        }
        Ok(GroupElement { bits: 1u64 << (n - i), n })
    }

    /// Builds the element from its coordinates `a_1, ..., a_n`.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let n = coords.len() as u32;
        check_dim(n)?;
        let mut bits = 0u64;
        for &c in coords {
            if c > 1 {
                return Err(Error::InvalidBitString(format!("{coords:?}")));
            }
            bits = (bits << 1) | c as u64;
        }
        Ok(GroupElement { bits, n })
    }

    /// Sum of `epsilon_{i}` over a sequence of labels in `1..=n`.
    pub fn sum_of_units(n: u32, labels: &[usize]) -> Result<Self> {
        let mut acc = Self::zero(n)?;
        for &l in labels {
            acc = acc + Self::unit(n, l as u32)?;
        }
        Ok(acc)
    }

    /// Element with the vertex index `index` (lexicographic order).
    pub fn from_index(n: u32, index: usize) -> Result<Self> {
        Self::new(n, index as u64)
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Coordinate `a_i`, `i` in `1..=n`.
    pub fn coord(&self, i: u32) -> u8 {
        debug_assert!(i >= 1 && i <= self.n);
        ((self.bits >> (self.n - i)) & 1) as u8
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Number of ones.
    pub fn hamming_weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Integer dot product `a . b`.
    pub fn dot(&self, other: &GroupElement) -> Result<u32> {
        self.same_dim(other)?;
        Ok((self.bits & other.bits).count_ones())
    }

    /// `chi_b(a) = (-1)^(a . b)`.
    pub fn character_value(&self, b: &GroupElement) -> Result<i32> {
        Ok(if self.dot(b)? % 2 == 0 { 1 } else { -1 })
    }

    pub fn checked_add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.same_dim(other)?;
        Ok(GroupElement { bits: self.bits ^ other.bits, n: self.n })
    }

    /// Every element of `Z_2^n` in index order.
    pub fn all(n: u32) -> Result<impl Iterator<Item = GroupElement>> {
        check_dim(n)?;
        if n >= usize::BITS {
            return Err(Error::InvalidDimension(n));
        }
        Ok((0..1u64 << n).map(move |bits| GroupElement { bits, n }))
    }

    fn same_dim(&self, other: &GroupElement) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch { left: self.n, right: other.n })
        } else {
            Ok(())
        }
    }
}

fn check_dim(n: u32) -> Result<()> {
    if n == 0 || n > GroupElement::MAX_DIM {
        Err(Error::InvalidDimension(n))
    } else {
        Ok(())
    }
}

/// Componentwise addition mod 2.
///
/// # Panics
///
/// Panics on a dimension mismatch; use [`GroupElement::checked_add`] to
/// handle that case.
impl Add for GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: GroupElement) -> GroupElement {
        self.checked_add(&rhs).expect("adding group elements of different dimension")
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Bit-string form, coordinate 1 first: `(1,1,0)` prints as `110`.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            write!(f, "{}", self.coord(i))?;
        }
        Ok(())
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(s);
        let coords: Vec<u8> = s
            .chars()
            .filter(|c| *c != ',')
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidBitString(s.to_string())),
            })
            .collect::<Result<_>>()?;
        if coords.is_empty() {
            return Err(Error::InvalidBitString(s.to_string()));
        }
        Self::from_coords(&coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    #[test]
    fn hamming_weights() {
        assert_eq!(g("000").hamming_weight(), 0);
        assert_eq!(g("110").hamming_weight(), 2);
        assert_eq!(g("111").hamming_weight(), 3);
    }

    #[test]
    fn characters() {
        assert_eq!(g("101").character_value(&g("110")).unwrap(), -1);
        assert_eq!(g("11").character_value(&g("11")).unwrap(), 1);
        for b in GroupElement::all(3).unwrap() {
            assert_eq!(g("000").character_value(&b).unwrap(), 1);
        }
        assert!(matches!(
            g("10").character_value(&g("100")),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn index_order_puts_coordinate_one_first() {
        assert_eq!(g("100").index(), 4);
        assert_eq!(g("001").index(), 1);
        assert_eq!(GroupElement::unit(3, 1).unwrap(), g("100"));
        assert_eq!(GroupElement::from_index(3, 6).unwrap().to_string(), "110");
        assert_eq!(g("(1,0,1)"), g("101"));
    }

    #[test]
    fn constructor_guards() {
        assert_eq!(GroupElement::zero(0), Err(Error::InvalidDimension(0)));
        assert_eq!(GroupElement::zero(65), Err(Error::InvalidDimension(65)));
        assert!(GroupElement::new(2, 4).is_err());
        assert!(GroupElement::new(64, u64::MAX).is_ok());
        assert!("102".parse::<GroupElement>().is_err());
        assert!("".parse::<GroupElement>().is_err());
    }

    proptest! {
        #[test]
        fn character_is_symmetric_and_multiplicative(n in 1u32..10, x: u64, y: u64, z: u64) {
            let mask = (1u64 << n) - 1;
            let a = GroupElement::new(n, x & mask).unwrap();
            let b = GroupElement::new(n, y & mask).unwrap();
            let c = GroupElement::new(n, z & mask).unwrap();
            prop_assert_eq!(a.character_value(&b).unwrap(), b.character_value(&a).unwrap());
            prop_assert_eq!(
                (a + b).character_value(&c).unwrap(),
                a.character_value(&c).unwrap() * b.character_value(&c).unwrap()
            );
            prop_assert!((a + a).is_zero());
            prop_assert_eq!(a.to_string().parse::<GroupElement>().unwrap(), a);
        }
    }
}

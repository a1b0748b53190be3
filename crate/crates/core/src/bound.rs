use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A nonnegative integer or the distinguished value `Unbounded`.
///
/// `Unbounded` compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Finite(usize),
    Unbounded,
}

impl Bound {
    pub fn is_unbounded(self) -> bool {
        matches!(self, Bound::Unbounded)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Bound::Finite(v) => Some(v),
            Bound::Unbounded => None,
        }
    }

    /// `true` when `value <= self`.
    pub fn admits(self, value: usize) -> bool {
        match self {
            Bound::Finite(limit) => value <= limit,
            Bound::Unbounded => true,
        }
    }

    pub fn from_option(value: Option<usize>) -> Self {
        value.map_or(Bound::Unbounded, Bound::Finite)
    }
}

impl From<usize> for Bound {
    fn from(value: usize) -> Self {
        Bound::Finite(value)
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a.cmp(b),
            (Bound::Finite(_), Bound::Unbounded) => Ordering::Less,
            (Bound::Unbounded, Bound::Finite(_)) => Ordering::Greater,
            (Bound::Unbounded, Bound::Unbounded) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Unbounded => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a nonnegative integer or `inf`, got `{0}`")]
pub struct ParseBoundError(String);

impl FromStr for Bound {
    type Err = ParseBoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Bound::Unbounded);
        }
        s.parse::<usize>()
            .map(Bound::Finite)
            .map_err(|_| ParseBoundError(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_unbounded_last() {
        assert!(Bound::Finite(usize::MAX) < Bound::Unbounded);
        assert!(Bound::Finite(2) < Bound::Finite(3));
        assert_eq!(Bound::Unbounded.max(Bound::Finite(7)), Bound::Unbounded);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("inf".parse::<Bound>().unwrap(), Bound::Unbounded);
        assert_eq!("12".parse::<Bound>().unwrap(), Bound::Finite(12));
        assert!("-1".parse::<Bound>().is_err());
        assert_eq!(Bound::Unbounded.to_string(), "inf");
    }

    #[test]
    fn admits() {
        assert!(Bound::Finite(1).admits(1));
        assert!(!Bound::Finite(1).admits(2));
        assert!(Bound::Unbounded.admits(usize::MAX));
    }
}

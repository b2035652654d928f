use std::fmt;
use std::ops::Add;
use std::str::FromStr;

/// A path or cycle length, possibly infinite.
///
/// Addition saturates: anything plus [`Length::INFINITE`] is infinite, and so
/// is a finite sum that would overflow.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Length(u64);

impl Length {
    pub const INFINITE: Length = Length(u64::MAX);
    pub const ZERO: Length = Length(0);
    pub const ONE: Length = Length(1);

    pub const fn new(value: u64) -> Length {
        Length(value)
    }

    pub fn is_finite(self) -> bool {
        self.0 != u64::MAX
    }

    pub fn value(self) -> Option<u64> {
        self.is_finite().then_some(self.0)
    }
}

impl Add for Length {
    type Output = Length;

    #[inline]
    fn add(self, rhs: Length) -> Length {
        Length(self.0.saturating_add(rhs.0))
    }
}

impl From<u64> for Length {
    fn from(v: u64) -> Self {
        Length(v)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl FromStr for Length {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "INF" | "∞" => Ok(Length::INFINITE),
            t => t
                .parse::<u64>()
                .ok()
                .filter(|&v| v != u64::MAX)
                .map(Length)
                .ok_or_else(|| format!("expected a non-negative integer or `inf`, got `{t}`")),
        }
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Family letter of a finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    G,
    H,
    I2,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::H => "H",
            Family::I2 => "I2",
        }
    }
}

/// The three infinite series with closed-form skew-growth polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    D,
}

impl Series {
    pub const ALL: [Series; 3] = [Series::A, Series::B, Series::D];

    /// Smallest admissible rank.
    pub fn min_rank(self) -> u32 {
        match self {
            Series::A => 1,
            Series::B => 2,
            Series::D => 4,
        }
    }

    pub fn at(self, rank: u32) -> Result<CoxeterType> {
        CoxeterType::new(self.into(), rank, None)
    }
}

impl From<Series> for Family {
    fn from(s: Series) -> Family {
        match s {
            Series::A => Family::A,
            Series::B => Family::B,
            Series::D => Family::D,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(Family::from(*self).letter())
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Series> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "D" => Ok(Series::D),
            _ => Err(Error::InvalidType(format!("{s} is not one of the series A, B, D"))),
        }
    }
}

/// A validated finite Coxeter type.
///
/// `I2(p)` has rank 2 and carries `p` separately; every other family is
/// determined by its letter and rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxeterType {
    family: Family,
    rank: u32,
    p: Option<u32>,
}

impl CoxeterType {
    pub fn new(family: Family, rank: u32, p: Option<u32>) -> Result<CoxeterType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            Family::H => rank == 3 || rank == 4,
            Family::I2 => rank == 2 && p.is_some_and(|p| p >= 3),
        };
        let p_ok = (family == Family::I2) == p.is_some();
        if ok && p_ok {
            Ok(CoxeterType { family, rank, p })
        } else {
            let shown = match p {
                Some(p) => format!("{}({p}) with rank {rank}", family.letter()),
                None => format!("{}{rank}", family.letter()),
            };
            Err(Error::InvalidType(shown))
        }
    }

    pub fn a(l: u32) -> Result<Self> {
        Self::new(Family::A, l, None)
    }

    pub fn b(l: u32) -> Result<Self> {
        Self::new(Family::B, l, None)
    }

    pub fn d(l: u32) -> Result<Self> {
        Self::new(Family::D, l, None)
    }

    pub fn e(l: u32) -> Result<Self> {
        Self::new(Family::E, l, None)
    }

    pub fn f4() -> Self {
        CoxeterType { family: Family::F, rank: 4, p: None }
    }

    pub fn g2() -> Self {
        CoxeterType { family: Family::G, rank: 2, p: None }
    }

    pub fn h(l: u32) -> Result<Self> {
        Self::new(Family::H, l, None)
    }

    pub fn i2(p: u32) -> Result<Self> {
        Self::new(Family::I2, 2, Some(p))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Dihedral parameter, only for `I2(p)`.
    pub fn dihedral_order(&self) -> Option<u32> {
        self.p
    }

    pub fn series(&self) -> Option<Series> {
        match self.family {
            Family::A => Some(Series::A),
            Family::B => Some(Series::B),
            Family::D => Some(Series::D),
            _ => None,
        }
    }

    /// Weyl/Coxeter groups realizable over the integers.
    pub fn is_crystallographic(&self) -> bool {
        match self.family {
            Family::H => false,
            Family::I2 => matches!(self.p, Some(3 | 4 | 6)),
            _ => true,
        }
    }

    /// Every type of bounded rank: E6, E7, E8, F4, G2, H3, H4.
    pub fn exceptional() -> Vec<CoxeterType> {
        vec![
            CoxeterType { family: Family::E, rank: 6, p: None },
            CoxeterType { family: Family::E, rank: 7, p: None },
            CoxeterType { family: Family::E, rank: 8, p: None },
            Self::f4(),
            Self::g2(),
            CoxeterType { family: Family::H, rank: 3, p: None },
            CoxeterType { family: Family::H, rank: 4, p: None },
        ]
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            Some(p) => write!(f, "I2({p})"),
            None => write!(f, "{}{}", self.family.letter(), self.rank),
        }
    }
}

/// Parses `FAMILY[:RANK]`, e.g. `A:12`, `I2:7`, `E8`, `e:6`, `G2`, `I2(5)`.
/// Case-insensitive; for `I2` the number is the dihedral parameter.
impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<CoxeterType> {
        let raw = s.trim();
        let up = raw.to_ascii_uppercase();
        let bad = || Error::InvalidType(raw.to_string());
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());

        if let Some(rest) = up.strip_prefix("I2") {
            let rest = rest.trim_start_matches(':');
            let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
            return CoxeterType::i2(num(rest)?);
        }
        let (letter, rest) = up.split_at(up.chars().next().map_or(0, char::len_utf8));
        let family = match letter {
            "A" => Family::A,
            "B" => Family::B,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            "H" => Family::H,
            _ => return Err(bad()),
        };
        let rest = rest.strip_prefix(':').unwrap_or(rest);
        CoxeterType::new(family, num(rest)?, None)
    }
}

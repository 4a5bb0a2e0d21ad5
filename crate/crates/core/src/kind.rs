use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParameterKind {
    Domination,
    PowerDomination,
    StandardZeroForcing,
    PsdZeroForcing,
    SkewZeroForcing,
    VertexCover,
    ConnectedDomination,
    Independence,
    Irredundance,
    ZeroForcingIrredundance,
}

/// X kinds are superset-closed and minimized; Y kinds are subset-closed and maximized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    X,
    Y,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 10] = [
        ParameterKind::Domination,
        ParameterKind::PowerDomination,
        ParameterKind::StandardZeroForcing,
        ParameterKind::PsdZeroForcing,
        ParameterKind::SkewZeroForcing,
        ParameterKind::VertexCover,
        ParameterKind::ConnectedDomination,
        ParameterKind::Independence,
        ParameterKind::Irredundance,
        ParameterKind::ZeroForcingIrredundance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::Domination => "dom",
            ParameterKind::PowerDomination => "pd",
            ParameterKind::StandardZeroForcing => "zf",
            ParameterKind::PsdZeroForcing => "psd",
            ParameterKind::SkewZeroForcing => "skew",
            ParameterKind::VertexCover => "vc",
            ParameterKind::ConnectedDomination => "cdom",
            ParameterKind::Independence => "ind",
            ParameterKind::Irredundance => "ir",
            ParameterKind::ZeroForcingIrredundance => "zir",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            ParameterKind::Independence | ParameterKind::Irredundance | ParameterKind::ZeroForcingIrredundance => {
                Direction::Y
            }
            _ => Direction::X,
        }
    }

    pub fn is_x(self) -> bool {
        self.direction() == Direction::X
    }

    pub fn robust(self) -> bool {
        self != ParameterKind::ConnectedDomination
    }

    pub fn value_at_k1(self) -> usize {
        match self {
            ParameterKind::SkewZeroForcing | ParameterKind::VertexCover => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ParameterKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metadata() {
        let x: Vec<_> = ParameterKind::ALL.iter().filter(|k| k.is_x()).collect();
        assert_eq!(x.len(), 7);
        assert!(ParameterKind::ALL[..7].iter().all(|k| k.is_x()));
        assert_eq!(ParameterKind::ALL.iter().filter(|k| !k.robust()).count(), 1);
        let zero: Vec<_> = ParameterKind::ALL.iter().filter(|k| k.value_at_k1() == 0).map(|k| k.name()).collect();
        assert_eq!(zero, vec!["skew", "vc"]);
        for k in ParameterKind::ALL {
            assert_eq!(k.name().parse::<ParameterKind>().unwrap(), k);
        }
        assert!("tdom".parse::<ParameterKind>().is_err());
    }
}

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

/// Number of Dominator moves, or `Infinite` when Staller wins.
///
/// The derived order puts every `Finite(k)` below `Infinite`, and addition
/// saturates at `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GameValue {
    Finite(u32),
    Infinite,
}

impl GameValue {
    pub const ZERO: GameValue = GameValue::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(k) => Some(k),
            GameValue::Infinite => None,
        }
    }

    /// `self - k`, saturating at zero. `Infinite` stays `Infinite`.
    pub fn saturating_sub(self, k: u32) -> GameValue {
        match self {
            GameValue::Finite(v) => GameValue::Finite(v.saturating_sub(k)),
            GameValue::Infinite => GameValue::Infinite,
        }
    }
}

impl Add for GameValue {
    type Output = GameValue;

    fn add(self, rhs: GameValue) -> GameValue {
        match (self, rhs) {
            (GameValue::Finite(a), GameValue::Finite(b)) => GameValue::Finite(a + b),
            _ => GameValue::Infinite,
        }
    }
}

impl Add<u32> for GameValue {
    type Output = GameValue;

    fn add(self, rhs: u32) -> GameValue {
        self + GameValue::Finite(rhs)
    }
}

impl From<u32> for GameValue {
    fn from(k: u32) -> Self {
        GameValue::Finite(k)
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(k) => write!(f, "{k}"),
            GameValue::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for GameValue {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(GameValue::Infinite)
        } else {
            s.parse().map(GameValue::Finite)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }

    /// `"D"` or `"S"`.
    pub fn letter(self) -> &'static str {
        match self {
            Player::Dominator => "D",
            Player::Staller => "S",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Player {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "d" | "D" | "dominator" => Ok(Player::Dominator),
            "s" | "S" | "staller" => Ok(Player::Staller),
            other => Err(format!("unknown player `{other}`, expected d or s")),
        }
    }
}

/// Deterministic node budget shared by the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    /// Counts one node; `false` once the limit has been passed.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn exceeded(&self) -> bool {
        self.used > self.limit
    }
}

/// Result of a bounded exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    /// The whole search space was explored without success.
    Exhausted,
    BudgetExceeded,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(x) => Outcome::Found(f(x)),
            Outcome::Exhausted => Outcome::Exhausted,
            Outcome::BudgetExceeded => Outcome::BudgetExceeded,
        }
    }
}

//! Compensated summation with a magnitude tracker for rounding budgets.

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    /// Folds another partial sum in, keeping both compensation terms.
    pub fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.sum);
        self.add(other.compensation);
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

/// A certified-sum accumulator: the compensated value of `|z|` terms, the
/// running absolute mass of every summand that went into those terms, and a
/// term count. The mass bounds how much rounding each term could carry.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MassSum {
    pub value: CompensatedSum,
    pub mass: CompensatedSum,
    pub terms: u64,
}

impl MassSum {
    #[inline]
    pub fn add(&mut self, value: f64, mass: f64) {
        self.value.add(value);
        self.mass.add(mass);
        self.terms += 1;
    }

    pub fn merge(&mut self, other: &MassSum) {
        self.value.merge(&other.value);
        self.mass.merge(&other.mass);
        self.terms += other.terms;
    }

    /// `terms * eps * mass`: a linear bound on accumulated rounding error.
    pub fn rounding_slack(&self) -> f64 {
        self.terms as f64 * f64::EPSILON * self.mass.value()
    }
}

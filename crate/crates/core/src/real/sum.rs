use super::Real;

/// Neumaier (improved Kahan–Babuška) running sum.
///
/// Terms are accumulated in the order they are pushed; callers sum in
/// ascending index order so that results are reproducible.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum<R: Real> {
    sum: R,
    compensation: R,
}

impl<R: Real> CompensatedSum<R> {
    pub fn new() -> Self {
        Self {
            sum: R::zero(),
            compensation: R::zero(),
        }
    }

    pub fn add(&mut self, x: R) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> R {
        self.sum + self.compensation
    }
}

impl<R: Real> Extend<R> for CompensatedSum<R> {
    fn extend<I: IntoIterator<Item = R>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl<R: Real> FromIterator<R> for CompensatedSum<R> {
    fn from_iter<I: IntoIterator<Item = R>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

pub fn compensated_sum<R: Real, I: IntoIterator<Item = R>>(iter: I) -> R {
    iter.into_iter().collect::<CompensatedSum<R>>().value()
}

//! Seeded rational test points. Coordinates are drawn from {-9..9}/{1..9}
//! and rejection-sampled off the hyperplanes with a bounded retry count, so
//! identical seeds give identical points on every platform.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::scalar::{rat, Scalar};

pub struct PointSampler {
    rng: ChaCha12Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> PointSampler {
        PointSampler {
            rng: ChaCha12Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Scalar {
        let n = self.rng.gen_range(-9i64..=9);
        let d = self.rng.gen_range(1i64..=9);
        Scalar::Rat(rat(n, d))
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let s = self.rational();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn point(&mut self, dim: usize) -> Vec<Scalar> {
        (0..dim).map(|_| self.rational()).collect()
    }

    /// A rational point z with alpha(z) != 0 for every covector.
    pub fn point_off_hyperplanes(&mut self, arr: &Arrangement) -> Result<Vec<Scalar>> {
        for _ in 0..1000 {
            let z = self.point(arr.rank());
            if (0..arr.size()).all(|i| !arr.eval(i, &z).is_zero()) {
                return Ok(z);
            }
        }
        Err(Error::SizeGuard(
            "failed to sample a point off the hyperplanes in 1000 tries".into(),
        ))
    }

    /// n nonzero scalars with z_i != z_j and z_i != -z_j for i != j.
    pub fn bn_family_point(&mut self, n: usize) -> Result<Vec<Scalar>> {
        'outer: for _ in 0..1000 {
            let z: Vec<Scalar> = (0..n).map(|_| self.nonzero_rational()).collect();
            for i in 0..n {
                for j in (i + 1)..n {
                    if z[i] == z[j] || z[i] == z[j].neg() {
                        continue 'outer;
                    }
                }
            }
            return Ok(z);
        }
        Err(Error::SizeGuard(
            "failed to sample a valid family point in 1000 tries".into(),
        ))
    }

    pub fn pick(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

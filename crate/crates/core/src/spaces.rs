//! Base spaces and closed-form rank tables for their symmetric products.
//!
//! For each supported space `X`, `sp_betti(j)` is the Betti table of the
//! j-th symmetric product `SP^j(X)` and `sp_relative_betti(j)` the rank
//! table of the pair `(SP^j(X), SP^(j-1)(X))`. The free functions at the
//! bottom are degreewise rank formulas for the comparison maps consumed
//! by the end-invariant pipeline in [`crate::endspace`].

use crate::betti::BettiTable;
use crate::error::Error;

/// Base space of an arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceModel {
    /// Closed orientable surface of the given genus.
    ClosedSurface { genus: u32 },
    /// Closed orientable surface of the given genus with `punctures >= 1`
    /// points removed. Homotopy equivalent to a wedge of
    /// `2*genus + punctures - 1` circles.
    PuncturedSurface { genus: u32, punctures: u32 },
    /// Wedge of `circles` circles.
    WedgeOfCircles { circles: u32 },
}

impl SpaceModel {
    /// Checks the structural constraints (a punctured surface needs at
    /// least one puncture).
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            SpaceModel::PuncturedSurface { punctures: 0, .. } => Err(Error::NoPunctures),
            _ => Ok(()),
        }
    }

    /// For the homotopy-wedge families, the number of circles in the
    /// equivalent wedge; `None` for closed surfaces.
    fn wedge_size(&self) -> Option<u32> {
        match *self {
            SpaceModel::ClosedSurface { .. } => None,
            SpaceModel::PuncturedSurface { genus, punctures } => Some(2 * genus + punctures - 1),
            SpaceModel::WedgeOfCircles { circles } => Some(circles),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        match *self {
            SpaceModel::ClosedSurface { genus } => 2 - 2 * i64::from(genus),
            _ => 1 - i64::from(self.wedge_size().unwrap()),
        }
    }

    /// Betti table of `SP^j` of this space. `SP^0` is a point.
    pub fn sp_betti(&self, j: u32) -> BettiTable {
        let mut t = BettiTable::zero();
        let j = i64::from(j);
        match *self {
            SpaceModel::ClosedSurface { genus } => {
                let w = i64::from(2 * genus);
                for d in 0..=2 * j {
                    let mut rank = 0u64;
                    for q in 0.max(d - j)..=d / 2 {
                        rank += binomial(w, d - 2 * q);
                    }
                    t.add(d as usize, rank);
                }
            }
            _ => {
                let w = i64::from(self.wedge_size().unwrap());
                for d in 0..=j {
                    t.add(d as usize, binomial(w, d));
                }
            }
        }
        t
    }

    /// Rank table of the relative pair `(SP^j, SP^(j-1))` of this space;
    /// for `j = 0` the pair is `(point, empty)` with rank 1 in degree 0.
    pub fn sp_relative_betti(&self, j: u32) -> BettiTable {
        let mut t = BettiTable::zero();
        let j = i64::from(j);
        match *self {
            SpaceModel::ClosedSurface { genus } => {
                let w = i64::from(2 * genus);
                for d in j..=2 * j {
                    t.add(d as usize, binomial(w, 2 * j - d));
                }
            }
            _ => {
                let w = i64::from(self.wedge_size().unwrap());
                t.add(j as usize, binomial(w, j));
            }
        }
        t
    }

    /// Euler characteristic of `SP^j` of this space.
    pub fn sp_euler(&self, j: u32) -> i64 {
        self.sp_betti(j).euler()
    }
}

/// Binomial coefficient, zero whenever the arguments fall outside
/// `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        // the running product of i consecutive factors is divisible by i!
        acc = acc.checked_mul(n - k + i).expect("binomial overflow") / i;
    }
    u64::try_from(acc).expect("binomial result exceeds u64")
}

/// Kernel and image ranks in degree `d` of the degreewise comparison map
/// between the homology of `SP^n` of the punctured surface `(genus,
/// punctures)` and of the closed surface obtained by filling it in.
/// Both vanish above degree `n`.
pub fn ker_im_beta(genus: u32, punctures: u32, n: u32, d: i64) -> (u64, u64) {
    assert!(punctures >= 1, "needs at least one puncture");
    if d > i64::from(n) {
        return (0, 0);
    }
    let open = i64::from(2 * genus + punctures - 1);
    let closed = i64::from(2 * genus);
    let ker = binomial(open, d) - binomial(closed, d);
    (ker, binomial(closed, d))
}

/// Rank in degree `p` of the image of the cap-product map linking the
/// n-th and (n-1)-st symmetric powers of the closed genus-`genus`
/// surface; zero from degree `n` on.
pub fn im_cap(genus: u32, n: u32, p: i64) -> u64 {
    if p >= i64::from(n) {
        0
    } else {
        binomial(i64::from(2 * genus), p)
    }
}

/// Rank in degree `d` of the duality map for `SP^n` of the punctured
/// surface `(genus, punctures)`; zero below the middle degree `n`.
pub fn phi(genus: u32, punctures: u32, n: u32, d: i64) -> u64 {
    assert!(punctures >= 1, "needs at least one puncture");
    if d < i64::from(n) {
        0
    } else {
        binomial(i64::from(2 * genus + punctures - 1), 2 * i64::from(n) - d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Coefficient of `t^j` in `(1 - t)^(-chi)`: an independent route to
    /// the Euler characteristic of the j-th symmetric product of a space
    /// with Euler characteristic `chi`.
    fn euler_series_coefficient(chi: i64, j: u32) -> i64 {
        let j = i64::from(j);
        if chi <= 0 {
            // (1 - t)^(-chi) is a polynomial with signed binomial coefficients
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * binomial(-chi, j) as i64
        } else {
            binomial(chi - 1 + j, j) as i64
        }
    }

    fn closed(genus: u32) -> SpaceModel {
        SpaceModel::ClosedSurface { genus }
    }

    fn punctured(genus: u32, punctures: u32) -> SpaceModel {
        SpaceModel::PuncturedSurface { genus, punctures }
    }

    fn wedge(circles: u32) -> SpaceModel {
        SpaceModel::WedgeOfCircles { circles }
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 5), 1);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(52, 26), 495_918_532_948_104);
    }

    #[test]
    fn torus_second_power_betti() {
        assert_eq!(
            closed(1).sp_betti(2),
            BettiTable::from_ranks(&[1, 2, 2, 2, 1])
        );
    }

    #[test]
    fn thrice_punctured_torus_second_power_betti() {
        assert_eq!(
            punctured(1, 3).sp_betti(2),
            BettiTable::from_ranks(&[1, 4, 6])
        );
    }

    #[test]
    fn zeroth_power_is_a_point() {
        for space in [closed(2), punctured(1, 2), wedge(5), wedge(0)] {
            assert_eq!(space.sp_betti(0), BettiTable::point());
            assert_eq!(space.sp_relative_betti(0), BettiTable::point());
            assert_eq!(space.sp_euler(0), 1);
        }
    }

    #[test]
    fn sphere_powers_look_like_projective_spaces() {
        // rank 1 in every even degree up to 2j, zero elsewhere
        for j in 0..=5u32 {
            let t = closed(0).sp_betti(j);
            for d in 0..=(2 * j as usize) {
                assert_eq!(t.rank(d), u64::from(d % 2 == 0), "j={j} d={d}");
            }
            assert_eq!(t.max_degree(), Some(2 * j as usize));
        }
    }

    #[test]
    fn relative_ranks_of_the_torus() {
        assert_eq!(
            closed(1).sp_relative_betti(1),
            BettiTable::from_ranks(&[0, 2, 1])
        );
        assert_eq!(
            closed(1).sp_relative_betti(2),
            BettiTable::from_ranks(&[0, 0, 1, 2, 1])
        );
    }

    #[test]
    fn relative_ranks_of_wedges_sit_in_one_degree() {
        let t = wedge(4).sp_relative_betti(2);
        assert_eq!(t, BettiTable::from_ranks(&[0, 0, 6]));
        // above the wedge size the relative pair is rationally trivial
        assert!(wedge(2).sp_relative_betti(3).is_zero());
    }

    #[test]
    fn punctured_surface_matches_its_wedge() {
        for genus in 0..=3 {
            for punctures in 1..=4 {
                let p = punctured(genus, punctures);
                let w = wedge(2 * genus + punctures - 1);
                for j in 0..=6 {
                    assert_eq!(p.sp_betti(j), w.sp_betti(j));
                    assert_eq!(p.sp_relative_betti(j), w.sp_relative_betti(j));
                }
                assert_eq!(p.euler_characteristic(), w.euler_characteristic());
            }
        }
    }

    #[test]
    fn sp_euler_matches_the_series_coefficient() {
        let mut spaces = vec![wedge(0)];
        for genus in 0..=4 {
            spaces.push(closed(genus));
        }
        for circles in 1..=8 {
            spaces.push(wedge(circles));
        }
        for genus in 0..=2 {
            for punctures in 1..=3 {
                spaces.push(punctured(genus, punctures));
            }
        }
        for space in spaces {
            let chi = space.euler_characteristic();
            for j in 0..=10 {
                assert_eq!(
                    space.sp_euler(j),
                    euler_series_coefficient(chi, j),
                    "space {space:?}, power {j}"
                );
            }
        }
    }

    #[test]
    fn relative_ranks_sum_to_sp_betti() {
        for space in [closed(0), closed(2), wedge(3), punctured(1, 2)] {
            for n in 0..=6u32 {
                let sum = (0..=n)
                    .map(|j| space.sp_relative_betti(j))
                    .fold(BettiTable::zero(), |acc, t| acc.sum(&t));
                assert_eq!(sum, space.sp_betti(n), "space {space:?}, power {n}");
            }
        }
    }

    #[test]
    fn comparison_map_ranks() {
        // genus 1, one puncture, n = 2
        assert_eq!(ker_im_beta(1, 1, 2, 0), (0, 1));
        assert_eq!(ker_im_beta(1, 1, 2, 1), (0, 2));
        assert_eq!(ker_im_beta(1, 1, 2, 2), (0, 1));
        assert_eq!(ker_im_beta(1, 1, 2, 3), (0, 0));
        // three punctures open up a kernel
        assert_eq!(ker_im_beta(1, 3, 2, 1), (2, 2));
        assert_eq!(ker_im_beta(1, 3, 2, -1), (0, 0));

        assert_eq!(im_cap(1, 2, 0), 1);
        assert_eq!(im_cap(1, 2, 1), 2);
        assert_eq!(im_cap(1, 2, 2), 0);
        assert_eq!(im_cap(1, 2, -1), 0);

        // phi vanishes below the middle degree and walks back down above it
        assert_eq!(phi(1, 3, 2, 1), 0);
        assert_eq!(phi(1, 3, 2, 2), binomial(4, 2));
        assert_eq!(phi(1, 3, 2, 3), binomial(4, 1));
        assert_eq!(phi(1, 3, 2, 4), 1);
        assert_eq!(phi(1, 3, 2, 5), 0);
    }

    #[test]
    fn validate_rejects_zero_punctures() {
        assert_eq!(punctured(1, 0).validate(), Err(Error::NoPunctures));
        assert!(punctured(1, 1).validate().is_ok());
        assert!(wedge(0).validate().is_ok());
    }
}

use super::{AlgebroidSpec, Section};
use crate::error::{Error, Result};
use crate::scalars::Polynomial;

/// `Gamma^C_aB` with `nabla_{e_a} e_B = Gamma^C_aB e_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionCoefficients {
    /// `values[a][B][C]`
    values: Vec<Vec<Vec<Polynomial>>>,
}

impl ConnectionCoefficients {
    pub fn get(&self, a: usize, b: usize, c: usize) -> &Polynomial {
        &self.values[a][b][c]
    }
}

impl AlgebroidSpec {
    /// The kernel connection `nabla_phi v = s([phi, t(v)])`, after checking
    /// that `[phi, t(v)]` lies in the span of the kernel frame.
    pub fn connection(&self, phi: &Section, v: &Section) -> Result<Section> {
        let tv = self.embed(v)?;
        let br = self.bracket(phi, &tv)?;
        self.kernel_component(&br)?
            .ok_or_else(|| Error::BracketLeavesKernel(format!("[{phi}, t({v})] = {br}")))
    }

    pub fn connection_coefficients(&self) -> Result<ConnectionCoefficients> {
        let values = (0..self.rank())
            .map(|a| {
                (0..self.kernel_rank())
                    .map(|b| {
                        let v = self.connection(&self.frame(a), &self.kernel_basis(b))?;
                        Ok(v.coeffs().to_vec())
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ConnectionCoefficients { values })
    }
}

/// The flat frame connection `nabla_phi (w^b e_b) = rho(phi)[w^b] e_b` on a
/// trivial bundle; only the anchor of `spec` is used.
pub fn frame_connection(spec: &AlgebroidSpec, phi: &Section, w: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let rho = spec.anchor_of(phi)?;
    w.iter().map(|c| rho.apply(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::Ambient;
    use crate::scalars::integer;

    #[test]
    fn abelian_algebra_connection_vanishes() {
        let spec = AlgebroidSpec::almost_lie_algebra(2, []).unwrap();
        let v = spec.connection(&spec.frame(0), &spec.kernel_basis(1)).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn over_a_point_connection_is_the_bracket() {
        let spec = AlgebroidSpec::almost_lie_algebra(
            3,
            [(0, 1, 0, integer(1)), (1, 2, 1, integer(1)), (2, 0, 2, integer(1))],
        )
        .unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let v = spec.connection(&spec.frame(a), &spec.kernel_basis(b)).unwrap();
                let br = spec.bracket(&spec.frame(a), &spec.frame(b)).unwrap();
                assert_eq!(v.coeffs(), br.coeffs());
                assert_eq!(v.ambient(), Ambient::F);
            }
        }
    }

    #[test]
    fn product_connection_differentiates_coefficients() {
        // TM x g with m = 1, g abelian of dim 1: nabla_{X (+) 0}(0 (+) f xi) = 0 (+) X[f] xi
        let spec = AlgebroidSpec::builder(1, 2, 1)
            .anchor(0, 0, Polynomial::one(1))
            .kernel_frame(1, 0, Polynomial::one(1))
            .kernel_projection(0, 1, Polynomial::one(1))
            .build()
            .unwrap();
        let x = Polynomial::var(1, 0);
        let f = &x * &x;
        let big_x = spec.frame(0).scale(&x);
        let v = Section::new(Ambient::F, vec![f]);
        let out = spec.connection(&big_x, &v).unwrap();
        // X = x d/dx, so X[x^2] = 2 x^2
        assert_eq!(out.coeffs()[0], (&x * &x).scale(&integer(2)));
    }

    #[test]
    fn bracket_leaving_kernel_is_an_error() {
        // [e1, e2] = e1 with e2 in the kernel frame and rho(e1) = 0 but e1 outside the frame
        let spec = AlgebroidSpec::builder(1, 2, 1)
            .structure(1, 0, 0, Polynomial::one(1))
            .kernel_frame(1, 0, Polynomial::one(1))
            .kernel_projection(0, 1, Polynomial::one(1))
            .build()
            .unwrap();
        assert!(matches!(
            spec.connection(&spec.frame(0), &spec.kernel_basis(0)),
            Err(Error::BracketLeavesKernel(_))
        ));
    }

    #[test]
    fn frame_connection_cases() {
        let spec = AlgebroidSpec::builder(1, 1, 0).anchor(0, 0, Polynomial::one(1)).build().unwrap();
        let x = Polynomial::var(1, 0);
        assert_eq!(
            frame_connection(&spec, &spec.frame(0), &[x.clone()]).unwrap(),
            vec![Polynomial::one(1)]
        );
        assert!(frame_connection(&spec, &spec.frame(0), &[Polynomial::from_int(1, 3)]).unwrap()[0].is_zero());
        let point = AlgebroidSpec::almost_lie_algebra(1, []).unwrap();
        assert!(frame_connection(&point, &point.frame(0), &[Polynomial::one(0)]).unwrap()[0].is_zero());
    }
}

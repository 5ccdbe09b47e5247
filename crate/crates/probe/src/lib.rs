use nalgebra::{DMatrix, DVector};
use num_dual::DualNum;

pub fn generic_solve<T: DualNum<f64> + nalgebra::RealField>(a: &DMatrix<T>, b: &DVector<T>) -> DVector<T> {
    a.clone().lu().solve(b).unwrap()
}

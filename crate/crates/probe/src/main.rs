use nalgebra::{DMatrix, DVector};
use num_dual::*;

fn f<T: DualNum<f64> + nalgebra::RealField + Copy>(x: &[T]) -> T {
    let a = DMatrix::from_row_slice(2, 2, &[x[0], T::one(), T::one(), x[1]]);
    let b = DVector::from_vec(vec![x[0].sin(), x[1] * x[1]]);
    let y = a.lu().solve(&b).unwrap();
    y[0]
}

fn main() {
    let x = [1.3f64, 0.7];
    let h = 1e-6;
    // scalar dual, one direction at a time
    for i in 0..2 {
        let xd: Vec<Dual64> = x.iter().enumerate()
            .map(|(j, &v)| if j == i { Dual64::from_re(v).derivative() } else { Dual64::from_re(v) })
            .collect();
        let out = f(&xd);
        let mut xp = x; xp[i] += h;
        let mut xm = x; xm[i] -= h;
        let xpd: Vec<Dual64> = xp.iter().map(|&v| Dual64::from_re(v)).collect();
        let xmd: Vec<Dual64> = xm.iter().map(|&v| Dual64::from_re(v)).collect();
        let fd = (f(&xpd).re - f(&xmd).re) / (2.0 * h);
        println!("scalar grad[{}] dual={:.14} fd={:.14} diff={:.3e}", i, out.eps, fd, (out.eps - fd).abs());
    }
    // batched: DualSVec64<2>
    let xd: Vec<DualSVec64<2>> = x.iter().enumerate().map(|(i, &v)| DualSVec64::from_re(v).derivative(i)).collect();
    let out = f(&xd);
    let g = out.eps.unwrap_generic(nalgebra::Const::<2>, nalgebra::U1);
    println!("batched val={:.6} grad=[{:.10}, {:.10}]", out.re, g[0], g[1]);

    use clarabel::algebra::*;
    use clarabel::solver::*;
    let p = CscMatrix::identity(2);
    let q = vec![-1.0, -2.0];
    let a = CscMatrix::from(&[[1.0, 1.0], [0.0, -1.0]]);
    let b = vec![1.0, 0.0];
    let cones = [ZeroConeT(1), NonnegativeConeT(1)];
    let settings = DefaultSettingsBuilder::default().verbose(false).build().unwrap();
    let mut solver = DefaultSolver::new(&p, &q, &a, &b, &cones, settings).unwrap();
    solver.solve();
    println!("QP status {:?} x = {:?}", solver.solution.status, solver.solution.x);
}

fn main() {
    for &a in &[0.5, 1.0, 2.0, 10.0] {
        for &b in &[0.5, 1.0, 2.0, 10.0] {
            let mut worst = (0.0, 0.0, 0.0);
            for i in 1..100 {
                let x = i as f64 / 100.0;
                let p = cdfbeta::special::beta_cdf(x, a, b).unwrap();
                if p <= 0.0 || p >= 1.0 { continue; }
                let back = cdfbeta::special::beta_quantile(p, a, b).unwrap();
                let err = (back - x).abs();
                if err > worst.0 { worst = (err, x, p); }
            }
            if worst.0 > 1e-9 {
                println!("a={a} b={b} worst |dx|={:.3e} at x={} p={}", worst.0, worst.1, worst.2);
            }
        }
    }
}

use quatroth::*;
use quatroth::gen::{random_matrix, EntryKind, SplitMix64};
use quatroth::matrix::Mat;
use std::time::Instant;

fn max_bits_c(m: &CMatrix) -> u64 {
    (0..m.rows()).flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
        .map(|(r, c)| {
            let z = &m[(r, c)];
            z.re.numer().bits().max(z.re.denom().bits()).max(z.im.numer().bits()).max(z.im.denom().bits())
        })
        .max().unwrap_or(0)
}

fn main() {
    let mut rng = SplitMix64::new(99);
    let aut = Automorphism::NEGATE_JK;
    let a = random_matrix(&mut rng, 3, 3, 9, EntryKind::Quaternion);
    let b = random_matrix(&mut rng, 3, 3, 9, EntryKind::Quaternion);
    let x0 = random_matrix(&mut rng, 3, 3, 9, EntryKind::Quaternion);
    let c = &(&a * &x0) - &(&x0.hat(aut) * &b);

    let coupled = block_upper_triangular(&a, &c, &b);
    let tw = coupled.twisted_adjoint(aut);
    println!("adjoint 12x12 max bits: {}", max_bits_c(&tw));
    let t = Instant::now();
    let cm = char_matrix(&tw);
    let sf = smith_normal_form(&cm);
    println!("smith(char) of coupled in {:?}, rank {}", t.elapsed(), sf.rank);

    let split = block_diag(&a, &b);
    let t = Instant::now();
    let sf2 = smith_normal_form(&char_matrix(&split.twisted_adjoint(aut)));
    println!("smith(char) of split in {:?}, rank {}", t.elapsed(), sf2.rank);
    println!("similar: {}", sf == sf2);

    // time just the solve operator pipeline
    let inst = EquationInstance::new(EquationKind::SylvesterHat, a, b, c, aut).unwrap();
    let t = Instant::now();
    let (op, rhs) = build_operator_matrix(&inst);
    println!("operator {}x{} built in {:?}", op.rows(), op.cols(), t.elapsed());
    let t = Instant::now();
    let sol = solve_linear_system(&op, &rhs);
    println!("linsolve in {:?}, solvable: {}", t.elapsed(), sol.is_solvable());
}

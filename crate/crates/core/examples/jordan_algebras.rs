//! Building Euclidean Jordan algebras and certifying them: Jordan identity,
//! power associativity, trace-form positivity, spin-factor coincidences and
//! capacity.

use albert::composition::Field;
use albert::jordan::{albert_algebra, capacity_estimate, euclidean_check, jspin_recognize, make_hermitian, make_jspin, verify_jordan, verify_power_assoc};
use albert::report::all_passed;

fn main() -> albert::Result<()> {
    let algebras = vec![make_hermitian(Field::Real, 3)?, make_hermitian(Field::Quaternion, 3)?, make_jspin(5)?, albert_algebra()];
    for a in &algebras {
        let jordan = all_passed(&verify_jordan(a, 5, 1));
        let power = verify_power_assoc(a, 6, 3, 2).passed;
        println!(
            "{:>8}  dim {:>2}  jordan {jordan}  power-assoc {power}  euclidean {}  capacity {}",
            a.name(),
            a.dim(),
            euclidean_check(a)?,
            capacity_estimate(a, 3, 3)?
        );
    }
    for field in [Field::Real, Field::Complex, Field::Quaternion, Field::Octonion] {
        let h2 = make_hermitian(field, 2)?;
        let n = jspin_recognize(&h2).map(|r| r.n);
        println!("{} is JSpin_{}", h2.name(), n.map_or("?".into(), |n| n.to_string()));
    }
    Ok(())
}

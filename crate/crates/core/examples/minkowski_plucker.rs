//! Complex Minkowski space as the big cell of the Grassmannian of planes in C^4.

use superspace::geometry::{self, Bivector, Plane, PluckerPoint};
use superspace::matrix::Mat;
use superspace::GaussianRational;

fn main() -> superspace::Result<()> {
    let int = GaussianRational::from_int;
    let plane = Plane::from_columns([1, 0, 2, -1].map(int), [0, 1, 3, 4].map(int))?;
    let y = geometry::plucker(&plane);
    println!("plucker = {y}");
    println!("Q(y) = {}", y.bivector().quadratic_form());

    let a = geometry::chart_to_cell(&y)?;
    println!("chart A = {:?}", a.body());
    let back = geometry::plucker(&geometry::cell_to_plane(&a)?);
    println!("roundtrip projectively equal: {}", back.projectively_equal(&y));

    let a = Mat::from_ints(&geometry::scalars(), &[&[1, 2], &[3, 4]])?;
    let coords: Vec<String> = geometry::big_cell_coordinates(&a).iter().map(ToString::to_string).collect();
    println!("big cell coordinates of [[1,2],[3,4]] = ({})", coords.join(", "));

    for y in [[1, 0, 0, 0, 0, 0], [0, 1, 1, 1, -1, 1], [0, 1, 0, 0, 0, 0]] {
        let class = geometry::cone_membership(&Bivector::from_ints(y))?;
        println!("{y:?} -> {}", class.as_str());
    }
    println!("off the quadric: {:?}", PluckerPoint::from_ints([1, 1, 1, 1, 1, 1]).is_err());
    println!("real quadric signature {:?}", geometry::qr_signature());
    Ok(())
}

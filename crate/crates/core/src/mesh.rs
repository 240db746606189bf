//! Welded triangle meshes of the R³ surfaces and 4D point clouds of `P`.
//!
//! A mesh is built from an `(n + 1) × (n + 1)` grid on the parameter square.
//! Each node is replaced by its canonical representative under the polygon's
//! relation, and nodes sharing a representative share a vertex, so the
//! identified edges of the square are stitched together in the mesh.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;

use crate::error::{Error, Result};
use crate::fmt::real;
use crate::point::Point3;
use crate::projective;
use crate::quotient::{canonicalize, ParamPoint, Polygon};
use crate::sampling::fibonacci_sphere;
use crate::torus::TorusGeometry;
use crate::{mobius, torus};

/// Which R³ surface to mesh.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeshSurface {
    Mobius,
    Torus(TorusGeometry),
}

impl MeshSurface {
    fn polygon(&self) -> Polygon {
        match self {
            MeshSurface::Mobius => Polygon::Mobius,
            MeshSurface::Torus(_) => Polygon::Torus,
        }
    }

    fn embed(&self, p: &ParamPoint) -> Point3 {
        match self {
            MeshSurface::Mobius => mobius::embed(p),
            MeshSurface::Torus(g) => torus::embed(p, g),
        }
    }

    /// Residual of the surface's implicit equation at `q`.
    pub fn implicit(&self, q: &Point3) -> f64 {
        match self {
            MeshSurface::Mobius => mobius::implicit(q),
            MeshSurface::Torus(g) => torus::implicit(q, g),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeldedMesh {
    /// Free of negative zeros, so the OBJ text round-trips bit for bit.
    pub vertices: Vec<Point3>,
    pub faces: Vec<[usize; 3]>,
    /// Vertex index of grid node `(i, j)`, stored at `i * (n + 1) + j`.
    pub weld_map: Vec<usize>,
    /// Cells per axis.
    pub n: usize,
}

impl WeldedMesh {
    pub fn node_vertex(&self, i: usize, j: usize) -> usize {
        self.weld_map[i * (self.n + 1) + j]
    }

    /// Undirected edges with the number of faces using each.
    pub fn edge_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut counts = BTreeMap::new();
        for f in &self.faces {
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_counts().len() as i64 + self.faces.len() as i64
    }

    /// Edges used by exactly one face.
    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        self.edge_counts()
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(e, _)| e)
            .collect()
    }

    /// Number of connected components of the boundary edge graph.
    pub fn boundary_loops(&self) -> usize {
        let edges = self.boundary_edges();
        let mut parent: HashMap<usize, usize> = HashMap::new();
        fn find(parent: &mut HashMap<usize, usize>, v: usize) -> usize {
            let p = *parent.entry(v).or_insert(v);
            if p == v {
                return v;
            }
            let root = find(parent, p);
            parent.insert(v, root);
            root
        }
        for &(a, b) in &edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra, rb);
            }
        }
        let verts: Vec<usize> = parent.keys().copied().collect();
        let mut roots: Vec<usize> = verts.into_iter().map(|v| find(&mut parent, v)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }
}

fn key(p: &ParamPoint) -> (u64, u64) {
    (p.a().to_bits(), p.b().to_bits())
}

/// Samples, welds and triangulates a surface with `n` cells per axis.
///
/// Each grid cell `(i, j)..(i + 1, j + 1)` is split along its
/// `(i, j)-(i + 1, j + 1)` diagonal.
pub fn build_mesh(surface: MeshSurface, n: usize) -> Result<WeldedMesh> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "mesh needs at least 3 cells per axis, got {n}"
        )));
    }
    let polygon = surface.polygon();
    let coord = |i: usize| (2.0 * i as f64 - n as f64) / n as f64;

    let mut index: HashMap<(u64, u64), usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut weld_map = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            let p = ParamPoint::new(polygon, coord(i), coord(j))?;
            let rep = canonicalize(p, polygon.relation())?.representative();
            let v = *index.entry(key(&rep)).or_insert_with(|| {
                let q = surface.embed(&rep);
                vertices.push(Point3::new(q.x + 0.0, q.y + 0.0, q.z + 0.0));
                vertices.len() - 1
            });
            weld_map.push(v);
        }
    }

    let node = |i: usize, j: usize| weld_map[i * (n + 1) + j];
    let mut faces = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            let (v00, v10, v11, v01) = (node(i, j), node(i + 1, j), node(i + 1, j + 1), node(i, j + 1));
            faces.push([v00, v10, v11]);
            faces.push([v00, v11, v01]);
        }
    }
    Ok(WeldedMesh {
        vertices,
        faces,
        weld_map,
        n,
    })
}

/// Writes `mesh` as Wavefront OBJ: `v x y z` lines, then `f i j k` lines with
/// 1-based indices.
pub fn write_obj<W: Write>(mesh: &WeldedMesh, mut out: W) -> Result<()> {
    for v in &mesh.vertices {
        writeln!(out, "v {} {} {}", real(v.x), real(v.y), real(v.z))?;
    }
    for f in &mesh.faces {
        writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1)?;
    }
    out.flush()?;
    Ok(())
}

/// Writes the images under the projective embedding of an `n_samples`-point
/// Fibonacci lattice as CSV with header `u,v,w,t`.
pub fn write_point_cloud_4d<W: Write>(n_samples: usize, mut out: W) -> Result<()> {
    if n_samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    writeln!(out, "u,v,w,t")?;
    for s in fibonacci_sphere(n_samples) {
        let q = projective::embed(&s);
        writeln!(out, "{},{},{},{}", real(q.u), real(q.v), real(q.w), real(q.t))?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_counts() {
        let m = build_mesh(MeshSurface::Torus(TorusGeometry::default()), 4).unwrap();
        assert_eq!(m.vertices.len(), 16);
        assert_eq!(m.faces.len(), 32);
        assert_eq!(m.edge_counts().len(), 48);
        assert_eq!(m.euler_characteristic(), 0);
        assert!(m.boundary_edges().is_empty());
        assert_eq!(m.boundary_loops(), 0);
    }

    #[test]
    fn mobius_counts() {
        let m = build_mesh(MeshSurface::Mobius, 4).unwrap();
        // 25 nodes, the 5 on v = -1 welded onto v = 1.
        assert_eq!(m.vertices.len(), 20);
        assert_eq!(m.euler_characteristic(), 0);
        assert!(!m.boundary_edges().is_empty());
        assert_eq!(m.boundary_loops(), 1);
    }

    #[test]
    fn seam_nodes_share_vertices() {
        let n = 6;
        let m = build_mesh(MeshSurface::Mobius, n).unwrap();
        for i in 0..=n {
            assert_eq!(m.node_vertex(i, 0), m.node_vertex(n - i, n));
        }
        let m = build_mesh(MeshSurface::Torus(TorusGeometry::default()), n).unwrap();
        for i in 0..=n {
            assert_eq!(m.node_vertex(i, 0), m.node_vertex(i, n));
            assert_eq!(m.node_vertex(0, i), m.node_vertex(n, i));
        }
    }

    #[test]
    fn rejects_small_grids() {
        assert!(build_mesh(MeshSurface::Mobius, 2).is_err());
    }

    #[test]
    fn single_triangle_obj() {
        let mesh = WeldedMesh {
            vertices: vec![
                Point3::new(0.0, 0.0, 0.0),
                Point3::new(1.0, 0.0, 0.0),
                Point3::new(0.0, 1.0, 0.0),
            ],
            faces: vec![[0, 1, 2]],
            weld_map: vec![],
            n: 0,
        };
        let mut buf = Vec::new();
        write_obj(&mesh, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n");
    }

    #[test]
    fn point_cloud_single_sample() {
        let mut buf = Vec::new();
        write_point_cloud_4d(1, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "u,v,w,t\n0,0,0,0\n");
        assert!(write_point_cloud_4d(0, Vec::new()).is_err());
    }
}

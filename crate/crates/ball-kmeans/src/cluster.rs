/// A cluster described by its centroid and the radius of the smallest
/// enclosing ball around it.
///
/// `radius` is the max member distance to `centroid` (0 when the cluster has
/// at most one member), `shift` is how far the centroid moved in the last
/// update, and `stable` records whether the member set survived the last
/// assignment step unchanged.
#[derive(Debug, Clone)]
pub struct BallCluster {
    pub id: usize,
    pub centroid: Vec<f64>,
    pub radius: f64,
    /// Member point indices, ascending.
    pub members: Vec<usize>,
    pub prev_centroid: Vec<f64>,
    pub shift: f64,
    pub stable: bool,
}

impl BallCluster {
    pub fn new(id: usize, centroid: Vec<f64>) -> Self {
        Self {
            id,
            prev_centroid: centroid.clone(),
            centroid,
            radius: 0.0,
            members: Vec::new(),
            shift: 0.0,
            stable: false,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

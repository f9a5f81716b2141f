pub struct CellTransport;
pub struct ImplicationMode;

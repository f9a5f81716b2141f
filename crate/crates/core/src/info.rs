pub struct ExtendedReal;

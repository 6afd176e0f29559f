(bounds (a 1 4) (b 1 4) (c 0 30) (label 0 1))

; a larger bound never gives a smaller result
(spec (forall 2)
  (pre (<= n@1 n@2))
  (observe 1 (not (< x n)))
  (observe 2 (not (< x n)))
  (global (<= x@1 x@2)))

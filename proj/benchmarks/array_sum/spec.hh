; every run of the first loop is matched by a run of the second loop
; producing the same partial sums
(spec (forall 1) (exists 1)
  (pre (and (= A@1 A@2) (= n@1 n@2)))
  (observe 1 (= pc 5))
  (observe 2 (or (= pc 5) (= pc 12)))
  (global (and (<= b@2 0) (= sum@1 sum@2))))

; every run can be copied step by step
(spec (forall 1) (exists 1)
  (pre (= x@1 x@2))
  (global (= x@1 x@2)))

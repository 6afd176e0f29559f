(spec (forall 2)
  (pre (= lo@1 lo@2))
  (global (= lo@1 lo@2)))

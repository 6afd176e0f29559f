; for every run there is a run over the same interval ending with a different sum
(spec (forall 1) (exists 1)
  (pre (and (= a@1 a@2) (= b@1 b@2)))
  (observe 1 (not (< a b)))
  (observe 2 (not (< a b)))
  (global (not (= c@1 c@2))))

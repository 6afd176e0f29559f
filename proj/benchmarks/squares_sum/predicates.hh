(predicates
  (> c@1 c@2)
  (= c@1 c@2)
  (< a@1 a@2)
  (= a@1 a@2)
  (> b@1 b@2)
  (< a@1 b@1)
  (< a@2 b@2)
  (> b@1 1)
  (> b@2 1))

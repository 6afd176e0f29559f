; program counters, branch choices, loop guards and the sum alignment
(predicates
  (= pc@1 1) (= pc@2 1)
  (= pc@1 2) (= pc@2 2)
  (= pc@1 3) (= pc@2 3)
  (= pc@1 4) (= pc@2 4)
  (= pc@1 5) (= pc@2 5)
  (= pc@1 6) (= pc@2 6)
  (= pc@1 7) (= pc@2 7)
  (= pc@1 11) (= pc@2 11)
  (= pc@1 12) (= pc@2 12)
  (= pc@1 13) (= pc@2 13)
  (= pc@1 14) (= pc@2 14)
  (= pc@1 15) (= pc@2 15)
  (= pc@1 18) (= pc@2 18)
  (= A@1 A@2)
  (= n@1 n@2)
  (> b@1 0)
  (<= b@2 0)
  (= i@2 (+ i@1 1))
  (= i@1 i@2)
  (< i@1 (- n@1 1))
  (< i@2 n@2)
  (= sum@1 sum@2)
  (= sum@1 (+ sum@2 (select A@1 i@1)))
  (= sum@1 (+ sum@2 (select A@2 i@2) y@2)))

#include "hcp3/named_data.hpp"

namespace hcp3::data {

const char* const goldner_harary = R"hcp(hcp undirected 11
0 1
0 2
0 3
0 4
0 5
0 6
0 8
0 9
1 2
1 3
1 4
1 5
1 7
1 8
1 10
2 3
2 4
2 6
2 7
2 9
2 10
3 5
3 6
3 7
4 8
4 9
4 10
)hcp";

const char* const sousselier = R"hcp(hcp undirected 16
0 1
0 14
0 15
1 2
1 5
1 8
2 3
2 10
2 13
3 4
3 15
4 5
4 11
4 14
5 6
6 7
6 15
7 8
7 11
8 9
9 10
9 15
10 11
11 12
12 13
12 15
13 14
)hcp";

const char* const twenty_four_cell = R"hcp(hcp undirected 24
0 1
0 2
0 3
0 4
0 6
0 7
0 8
0 9
1 2
1 3
1 5
1 6
1 10
1 11
1 14
2 4
2 5
2 7
2 10
2 12
2 15
3 4
3 5
3 8
3 11
3 13
3 16
4 5
4 9
4 12
4 13
4 17
5 14
5 15
5 16
5 17
6 7
6 8
6 10
6 11
6 18
6 19
7 9
7 10
7 12
7 18
7 20
8 9
8 11
8 13
8 18
8 21
9 12
9 13
9 18
9 22
10 14
10 15
10 19
10 20
11 14
11 16
11 19
11 21
12 15
12 17
12 20
12 22
13 16
13 17
13 21
13 22
14 15
14 16
14 19
14 23
15 17
15 20
15 23
16 17
16 21
16 23
17 22
17 23
18 19
18 20
18 21
18 22
19 20
19 21
19 23
20 22
20 23
21 22
21 23
22 23
)hcp";

const char* const foster_cage = R"hcp(hcp undirected 30
0 3
0 12
0 15
0 16
0 20
1 4
1 13
1 16
1 17
1 21
2 5
2 14
2 17
2 18
2 22
3 6
3 18
3 19
3 23
4 7
4 19
4 20
4 24
5 8
5 20
5 21
5 25
6 9
6 21
6 22
6 26
7 10
7 22
7 23
7 27
8 11
8 23
8 24
8 28
9 12
9 24
9 25
9 29
10 13
10 15
10 25
10 26
11 14
11 16
11 26
11 27
12 17
12 27
12 28
13 18
13 28
13 29
14 15
14 19
14 29
15 21
15 24
16 22
16 25
17 23
17 26
18 24
18 27
19 25
19 28
20 26
20 29
21 27
22 28
23 29
)hcp";

const char* const sims_gewirtz = R"hcp(hcp undirected 56
0 29
0 30
0 33
0 34
0 37
0 38
0 46
0 48
0 50
0 55
1 28
1 31
1 32
1 35
1 37
1 38
1 43
1 45
1 51
1 54
2 29
2 30
2 32
2 35
2 36
2 39
2 40
2 44
2 49
2 52
3 28
3 31
3 33
3 34
3 36
3 39
3 41
3 42
3 47
3 53
4 21
4 23
4 25
4 27
4 37
4 39
4 47
4 49
4 50
4 54
5 20
5 22
5 24
5 26
5 37
5 39
5 42
5 44
5 51
5 55
6 20
6 22
6 25
6 27
6 36
6 38
6 40
6 45
6 48
6 53
7 21
7 23
7 24
7 26
7 36
7 38
7 41
7 43
7 46
7 52
8 17
8 19
8 25
8 26
8 33
8 35
8 46
8 49
8 51
8 53
9 17
9 19
9 24
9 27
9 32
9 34
9 42
9 45
9 50
9 52
10 16
10 18
10 25
10 26
10 32
10 34
10 41
10 44
10 48
10 54
11 16
11 18
11 24
11 27
11 33
11 35
11 40
11 43
11 47
11 55
12 17
12 18
12 21
12 22
12 29
12 31
12 47
12 48
12 51
12 52
13 17
13 18
13 20
13 23
13 28
13 30
13 43
13 44
13 50
13 53
14 16
14 19
14 20
14 23
14 29
14 31
14 41
14 45
14 49
14 55
15 16
15 19
15 21
15 22
15 28
15 30
15 40
15 42
15 46
15 54
16 38
16 39
16 50
16 51
16 52
16 53
17 38
17 39
17 40
17 41
17 54
17 55
18 36
18 37
18 42
18 45
18 46
18 49
19 36
19 37
19 43
19 44
19 47
19 48
20 34
20 35
20 46
20 47
20 52
20 54
21 34
21 35
21 44
21 45
21 53
21 55
22 32
22 33
22 41
22 43
22 49
22 50
23 32
23 33
23 40
23 42
23 48
23 51
24 30
24 31
24 48
24 49
24 53
24 54
25 30
25 31
25 42
25 43
25 52
25 55
26 28
26 29
26 40
26 45
26 47
26 50
27 28
27 29
27 41
27 44
27 46
27 51
28 48
28 49
28 52
28 55
29 42
29 43
29 53
29 54
30 41
30 45
30 47
30 51
31 40
31 44
31 46
31 50
32 46
32 47
32 53
32 55
33 44
33 45
33 52
33 54
34 40
34 43
34 49
34 51
35 41
35 42
35 48
35 50
36 50
36 51
36 54
36 55
37 40
37 41
37 52
37 53
38 42
38 44
38 47
38 49
39 43
39 45
39 46
39 48
)hcp";

const char* const sheehan_40 = R"hcp(hcp undirected 40
0 20
0 39
1 38
1 39
2 37
2 38
2 39
3 36
3 37
3 38
3 39
4 35
4 36
4 37
4 38
4 39
5 34
5 35
5 36
5 37
5 38
5 39
6 33
6 34
6 35
6 36
6 37
6 38
6 39
7 32
7 33
7 34
7 35
7 36
7 37
7 38
7 39
8 31
8 32
8 33
8 34
8 35
8 36
8 37
8 38
8 39
9 30
9 31
9 32
9 33
9 34
9 35
9 36
9 37
9 38
9 39
10 29
10 30
10 31
10 32
10 33
10 34
10 35
10 36
10 37
10 38
10 39
11 28
11 29
11 30
11 31
11 32
11 33
11 34
11 35
11 36
11 37
11 38
11 39
12 27
12 28
12 29
12 30
12 31
12 32
12 33
12 34
12 35
12 36
12 37
12 38
12 39
13 26
13 27
13 28
13 29
13 30
13 31
13 32
13 33
13 34
13 35
13 36
13 37
13 38
13 39
14 25
14 26
14 27
14 28
14 29
14 30
14 31
14 32
14 33
14 34
14 35
14 36
14 37
14 38
14 39
15 24
15 25
15 26
15 27
15 28
15 29
15 30
15 31
15 32
15 33
15 34
15 35
15 36
15 37
15 38
15 39
16 23
16 24
16 25
16 26
16 27
16 28
16 29
16 30
16 31
16 32
16 33
16 34
16 35
16 36
16 37
16 38
16 39
17 22
17 23
17 24
17 25
17 26
17 27
17 28
17 29
17 30
17 31
17 32
17 33
17 34
17 35
17 36
17 37
17 38
17 39
18 21
18 22
18 23
18 24
18 25
18 26
18 27
18 28
18 29
18 30
18 31
18 32
18 33
18 34
18 35
18 36
18 37
18 38
18 39
19 20
19 21
19 22
19 23
19 24
19 25
19 26
19 27
19 28
19 29
19 30
19 31
19 32
19 33
19 34
19 35
19 36
19 37
19 38
19 39
20 21
20 22
20 23
20 24
20 25
20 26
20 27
20 28
20 29
20 30
20 31
20 32
20 33
20 34
20 35
20 36
20 37
20 38
20 39
21 22
21 23
21 24
21 25
21 26
21 27
21 28
21 29
21 30
21 31
21 32
21 33
21 34
21 35
21 36
21 37
21 38
21 39
22 23
22 24
22 25
22 26
22 27
22 28
22 29
22 30
22 31
22 32
22 33
22 34
22 35
22 36
22 37
22 38
22 39
23 24
23 25
23 26
23 27
23 28
23 29
23 30
23 31
23 32
23 33
23 34
23 35
23 36
23 37
23 38
23 39
24 25
24 26
24 27
24 28
24 29
24 30
24 31
24 32
24 33
24 34
24 35
24 36
24 37
24 38
24 39
25 26
25 27
25 28
25 29
25 30
25 31
25 32
25 33
25 34
25 35
25 36
25 37
25 38
25 39
26 27
26 28
26 29
26 30
26 31
26 32
26 33
26 34
26 35
26 36
26 37
26 38
26 39
27 28
27 29
27 30
27 31
27 32
27 33
27 34
27 35
27 36
27 37
27 38
27 39
28 29
28 30
28 31
28 32
28 33
28 34
28 35
28 36
28 37
28 38
28 39
29 30
29 31
29 32
29 33
29 34
29 35
29 36
29 37
29 38
29 39
30 31
30 32
30 33
30 34
30 35
30 36
30 37
30 38
30 39
31 32
31 33
31 34
31 35
31 36
31 37
31 38
31 39
32 33
32 34
32 35
32 36
32 37
32 38
32 39
33 34
33 35
33 36
33 37
33 38
33 39
34 35
34 36
34 37
34 38
34 39
35 36
35 37
35 38
35 39
36 37
36 38
36 39
37 38
37 39
38 39
)hcp";

const char* const sheehan_80 = R"hcp(hcp undirected 80
0 40
0 79
1 78
1 79
2 77
2 78
2 79
3 76
3 77
3 78
3 79
4 75
4 76
4 77
4 78
4 79
5 74
5 75
5 76
5 77
5 78
5 79
6 73
6 74
6 75
6 76
6 77
6 78
6 79
7 72
7 73
7 74
7 75
7 76
7 77
7 78
7 79
8 71
8 72
8 73
8 74
8 75
8 76
8 77
8 78
8 79
9 70
9 71
9 72
9 73
9 74
9 75
9 76
9 77
9 78
9 79
10 69
10 70
10 71
10 72
10 73
10 74
10 75
10 76
10 77
10 78
10 79
11 68
11 69
11 70
11 71
11 72
11 73
11 74
11 75
11 76
11 77
11 78
11 79
12 67
12 68
12 69
12 70
12 71
12 72
12 73
12 74
12 75
12 76
12 77
12 78
12 79
13 66
13 67
13 68
13 69
13 70
13 71
13 72
13 73
13 74
13 75
13 76
13 77
13 78
13 79
14 65
14 66
14 67
14 68
14 69
14 70
14 71
14 72
14 73
14 74
14 75
14 76
14 77
14 78
14 79
15 64
15 65
15 66
15 67
15 68
15 69
15 70
15 71
15 72
15 73
15 74
15 75
15 76
15 77
15 78
15 79
16 63
16 64
16 65
16 66
16 67
16 68
16 69
16 70
16 71
16 72
16 73
16 74
16 75
16 76
16 77
16 78
16 79
17 62
17 63
17 64
17 65
17 66
17 67
17 68
17 69
17 70
17 71
17 72
17 73
17 74
17 75
17 76
17 77
17 78
17 79
18 61
18 62
18 63
18 64
18 65
18 66
18 67
18 68
18 69
18 70
18 71
18 72
18 73
18 74
18 75
18 76
18 77
18 78
18 79
19 60
19 61
19 62
19 63
19 64
19 65
19 66
19 67
19 68
19 69
19 70
19 71
19 72
19 73
19 74
19 75
19 76
19 77
19 78
19 79
20 59
20 60
20 61
20 62
20 63
20 64
20 65
20 66
20 67
20 68
20 69
20 70
20 71
20 72
20 73
20 74
20 75
20 76
20 77
20 78
20 79
21 58
21 59
21 60
21 61
21 62
21 63
21 64
21 65
21 66
21 67
21 68
21 69
21 70
21 71
21 72
21 73
21 74
21 75
21 76
21 77
21 78
21 79
22 57
22 58
22 59
22 60
22 61
22 62
22 63
22 64
22 65
22 66
22 67
22 68
22 69
22 70
22 71
22 72
22 73
22 74
22 75
22 76
22 77
22 78
22 79
23 56
23 57
23 58
23 59
23 60
23 61
23 62
23 63
23 64
23 65
23 66
23 67
23 68
23 69
23 70
23 71
23 72
23 73
23 74
23 75
23 76
23 77
23 78
23 79
24 55
24 56
24 57
24 58
24 59
24 60
24 61
24 62
24 63
24 64
24 65
24 66
24 67
24 68
24 69
24 70
24 71
24 72
24 73
24 74
24 75
24 76
24 77
24 78
24 79
25 54
25 55
25 56
25 57
25 58
25 59
25 60
25 61
25 62
25 63
25 64
25 65
25 66
25 67
25 68
25 69
25 70
25 71
25 72
25 73
25 74
25 75
25 76
25 77
25 78
25 79
26 53
26 54
26 55
26 56
26 57
26 58
26 59
26 60
26 61
26 62
26 63
26 64
26 65
26 66
26 67
26 68
26 69
26 70
26 71
26 72
26 73
26 74
26 75
26 76
26 77
26 78
26 79
27 52
27 53
27 54
27 55
27 56
27 57
27 58
27 59
27 60
27 61
27 62
27 63
27 64
27 65
27 66
27 67
27 68
27 69
27 70
27 71
27 72
27 73
27 74
27 75
27 76
27 77
27 78
27 79
28 51
28 52
28 53
28 54
28 55
28 56
28 57
28 58
28 59
28 60
28 61
28 62
28 63
28 64
28 65
28 66
28 67
28 68
28 69
28 70
28 71
28 72
28 73
28 74
28 75
28 76
28 77
28 78
28 79
29 50
29 51
29 52
29 53
29 54
29 55
29 56
29 57
29 58
29 59
29 60
29 61
29 62
29 63
29 64
29 65
29 66
29 67
29 68
29 69
29 70
29 71
29 72
29 73
29 74
29 75
29 76
29 77
29 78
29 79
30 49
30 50
30 51
30 52
30 53
30 54
30 55
30 56
30 57
30 58
30 59
30 60
30 61
30 62
30 63
30 64
30 65
30 66
30 67
30 68
30 69
30 70
30 71
30 72
30 73
30 74
30 75
30 76
30 77
30 78
30 79
31 48
31 49
31 50
31 51
31 52
31 53
31 54
31 55
31 56
31 57
31 58
31 59
31 60
31 61
31 62
31 63
31 64
31 65
31 66
31 67
31 68
31 69
31 70
31 71
31 72
31 73
31 74
31 75
31 76
31 77
31 78
31 79
32 47
32 48
32 49
32 50
32 51
32 52
32 53
32 54
32 55
32 56
32 57
32 58
32 59
32 60
32 61
32 62
32 63
32 64
32 65
32 66
32 67
32 68
32 69
32 70
32 71
32 72
32 73
32 74
32 75
32 76
32 77
32 78
32 79
33 46
33 47
33 48
33 49
33 50
33 51
33 52
33 53
33 54
33 55
33 56
33 57
33 58
33 59
33 60
33 61
33 62
33 63
33 64
33 65
33 66
33 67
33 68
33 69
33 70
33 71
33 72
33 73
33 74
33 75
33 76
33 77
33 78
33 79
34 45
34 46
34 47
34 48
34 49
34 50
34 51
34 52
34 53
34 54
34 55
34 56
34 57
34 58
34 59
34 60
34 61
34 62
34 63
34 64
34 65
34 66
34 67
34 68
34 69
34 70
34 71
34 72
34 73
34 74
34 75
34 76
34 77
34 78
34 79
35 44
35 45
35 46
35 47
35 48
35 49
35 50
35 51
35 52
35 53
35 54
35 55
35 56
35 57
35 58
35 59
35 60
35 61
35 62
35 63
35 64
35 65
35 66
35 67
35 68
35 69
35 70
35 71
35 72
35 73
35 74
35 75
35 76
35 77
35 78
35 79
36 43
36 44
36 45
36 46
36 47
36 48
36 49
36 50
36 51
36 52
36 53
36 54
36 55
36 56
36 57
36 58
36 59
36 60
36 61
36 62
36 63
36 64
36 65
36 66
36 67
36 68
36 69
36 70
36 71
36 72
36 73
36 74
36 75
36 76
36 77
36 78
36 79
37 42
37 43
37 44
37 45
37 46
37 47
37 48
37 49
37 50
37 51
37 52
37 53
37 54
37 55
37 56
37 57
37 58
37 59
37 60
37 61
37 62
37 63
37 64
37 65
37 66
37 67
37 68
37 69
37 70
37 71
37 72
37 73
37 74
37 75
37 76
37 77
37 78
37 79
38 41
38 42
38 43
38 44
38 45
38 46
38 47
38 48
38 49
38 50
38 51
38 52
38 53
38 54
38 55
38 56
38 57
38 58
38 59
38 60
38 61
38 62
38 63
38 64
38 65
38 66
38 67
38 68
38 69
38 70
38 71
38 72
38 73
38 74
38 75
38 76
38 77
38 78
38 79
39 40
39 41
39 42
39 43
39 44
39 45
39 46
39 47
39 48
39 49
39 50
39 51
39 52
39 53
39 54
39 55
39 56
39 57
39 58
39 59
39 60
39 61
39 62
39 63
39 64
39 65
39 66
39 67
39 68
39 69
39 70
39 71
39 72
39 73
39 74
39 75
39 76
39 77
39 78
39 79
40 41
40 42
40 43
40 44
40 45
40 46
40 47
40 48
40 49
40 50
40 51
40 52
40 53
40 54
40 55
40 56
40 57
40 58
40 59
40 60
40 61
40 62
40 63
40 64
40 65
40 66
40 67
40 68
40 69
40 70
40 71
40 72
40 73
40 74
40 75
40 76
40 77
40 78
40 79
41 42
41 43
41 44
41 45
41 46
41 47
41 48
41 49
41 50
41 51
41 52
41 53
41 54
41 55
41 56
41 57
41 58
41 59
41 60
41 61
41 62
41 63
41 64
41 65
41 66
41 67
41 68
41 69
41 70
41 71
41 72
41 73
41 74
41 75
41 76
41 77
41 78
41 79
42 43
42 44
42 45
42 46
42 47
42 48
42 49
42 50
42 51
42 52
42 53
42 54
42 55
42 56
42 57
42 58
42 59
42 60
42 61
42 62
42 63
42 64
42 65
42 66
42 67
42 68
42 69
42 70
42 71
42 72
42 73
42 74
42 75
42 76
42 77
42 78
42 79
43 44
43 45
43 46
43 47
43 48
43 49
43 50
43 51
43 52
43 53
43 54
43 55
43 56
43 57
43 58
43 59
43 60
43 61
43 62
43 63
43 64
43 65
43 66
43 67
43 68
43 69
43 70
43 71
43 72
43 73
43 74
43 75
43 76
43 77
43 78
43 79
44 45
44 46
44 47
44 48
44 49
44 50
44 51
44 52
44 53
44 54
44 55
44 56
44 57
44 58
44 59
44 60
44 61
44 62
44 63
44 64
44 65
44 66
44 67
44 68
44 69
44 70
44 71
44 72
44 73
44 74
44 75
44 76
44 77
44 78
44 79
45 46
45 47
45 48
45 49
45 50
45 51
45 52
45 53
45 54
45 55
45 56
45 57
45 58
45 59
45 60
45 61
45 62
45 63
45 64
45 65
45 66
45 67
45 68
45 69
45 70
45 71
45 72
45 73
45 74
45 75
45 76
45 77
45 78
45 79
46 47
46 48
46 49
46 50
46 51
46 52
46 53
46 54
46 55
46 56
46 57
46 58
46 59
46 60
46 61
46 62
46 63
46 64
46 65
46 66
46 67
46 68
46 69
46 70
46 71
46 72
46 73
46 74
46 75
46 76
46 77
46 78
46 79
47 48
47 49
47 50
47 51
47 52
47 53
47 54
47 55
47 56
47 57
47 58
47 59
47 60
47 61
47 62
47 63
47 64
47 65
47 66
47 67
47 68
47 69
47 70
47 71
47 72
47 73
47 74
47 75
47 76
47 77
47 78
47 79
48 49
48 50
48 51
48 52
48 53
48 54
48 55
48 56
48 57
48 58
48 59
48 60
48 61
48 62
48 63
48 64
48 65
48 66
48 67
48 68
48 69
48 70
48 71
48 72
48 73
48 74
48 75
48 76
48 77
48 78
48 79
49 50
49 51
49 52
49 53
49 54
49 55
49 56
49 57
49 58
49 59
49 60
49 61
49 62
49 63
49 64
49 65
49 66
49 67
49 68
49 69
49 70
49 71
49 72
49 73
49 74
49 75
49 76
49 77
49 78
49 79
50 51
50 52
50 53
50 54
50 55
50 56
50 57
50 58
50 59
50 60
50 61
50 62
50 63
50 64
50 65
50 66
50 67
50 68
50 69
50 70
50 71
50 72
50 73
50 74
50 75
50 76
50 77
50 78
50 79
51 52
51 53
51 54
51 55
51 56
51 57
51 58
51 59
51 60
51 61
51 62
51 63
51 64
51 65
51 66
51 67
51 68
51 69
51 70
51 71
51 72
51 73
51 74
51 75
51 76
51 77
51 78
51 79
52 53
52 54
52 55
52 56
52 57
52 58
52 59
52 60
52 61
52 62
52 63
52 64
52 65
52 66
52 67
52 68
52 69
52 70
52 71
52 72
52 73
52 74
52 75
52 76
52 77
52 78
52 79
53 54
53 55
53 56
53 57
53 58
53 59
53 60
53 61
53 62
53 63
53 64
53 65
53 66
53 67
53 68
53 69
53 70
53 71
53 72
53 73
53 74
53 75
53 76
53 77
53 78
53 79
54 55
54 56
54 57
54 58
54 59
54 60
54 61
54 62
54 63
54 64
54 65
54 66
54 67
54 68
54 69
54 70
54 71
54 72
54 73
54 74
54 75
54 76
54 77
54 78
54 79
55 56
55 57
55 58
55 59
55 60
55 61
55 62
55 63
55 64
55 65
55 66
55 67
55 68
55 69
55 70
55 71
55 72
55 73
55 74
55 75
55 76
55 77
55 78
55 79
56 57
56 58
56 59
56 60
56 61
56 62
56 63
56 64
56 65
56 66
56 67
56 68
56 69
56 70
56 71
56 72
56 73
56 74
56 75
56 76
56 77
56 78
56 79
57 58
57 59
57 60
57 61
57 62
57 63
57 64
57 65
57 66
57 67
57 68
57 69
57 70
57 71
57 72
57 73
57 74
57 75
57 76
57 77
57 78
57 79
58 59
58 60
58 61
58 62
58 63
58 64
58 65
58 66
58 67
58 68
58 69
58 70
58 71
58 72
58 73
58 74
58 75
58 76
58 77
58 78
58 79
59 60
59 61
59 62
59 63
59 64
59 65
59 66
59 67
59 68
59 69
59 70
59 71
59 72
59 73
59 74
59 75
59 76
59 77
59 78
59 79
60 61
60 62
60 63
60 64
60 65
60 66
60 67
60 68
60 69
60 70
60 71
60 72
60 73
60 74
60 75
60 76
60 77
60 78
60 79
61 62
61 63
61 64
61 65
61 66
61 67
61 68
61 69
61 70
61 71
61 72
61 73
61 74
61 75
61 76
61 77
61 78
61 79
62 63
62 64
62 65
62 66
62 67
62 68
62 69
62 70
62 71
62 72
62 73
62 74
62 75
62 76
62 77
62 78
62 79
63 64
63 65
63 66
63 67
63 68
63 69
63 70
63 71
63 72
63 73
63 74
63 75
63 76
63 77
63 78
63 79
64 65
64 66
64 67
64 68
64 69
64 70
64 71
64 72
64 73
64 74
64 75
64 76
64 77
64 78
64 79
65 66
65 67
65 68
65 69
65 70
65 71
65 72
65 73
65 74
65 75
65 76
65 77
65 78
65 79
66 67
66 68
66 69
66 70
66 71
66 72
66 73
66 74
66 75
66 76
66 77
66 78
66 79
67 68
67 69
67 70
67 71
67 72
67 73
67 74
67 75
67 76
67 77
67 78
67 79
68 69
68 70
68 71
68 72
68 73
68 74
68 75
68 76
68 77
68 78
68 79
69 70
69 71
69 72
69 73
69 74
69 75
69 76
69 77
69 78
69 79
70 71
70 72
70 73
70 74
70 75
70 76
70 77
70 78
70 79
71 72
71 73
71 74
71 75
71 76
71 77
71 78
71 79
72 73
72 74
72 75
72 76
72 77
72 78
72 79
73 74
73 75
73 76
73 77
73 78
73 79
74 75
74 76
74 77
74 78
74 79
75 76
75 77
75 78
75 79
76 77
76 78
76 79
77 78
77 79
78 79
)hcp";


} // namespace hcp3::data

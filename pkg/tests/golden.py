"""Order-(k, l) golden rows for n = 4.

Each row lists an object and, when it is not fixed, its partner under the
involution of its family.  Rectangles are sorted; plane partitions have
l rows and k columns.
"""

ROWS = [{'order': (3, 0),
  'baxter': ('1234',),
  'twisted': ('1234',),
  'paths': [('EEE', 'EEE', 'EEE')],
  'tableaux': [((1, 3, 6, 9), (2, 5, 8, 11), (4, 7, 10, 12))],
  'rects': [((0, 0, 1, 4), (1, 0, 2, 4), (2, 0, 3, 4), (3, 0, 4, 4))],
  'pp': [()]},
 {'order': (2, 1),
  'baxter': ('1243', '2134'),
  'twisted': ('1243', '2134'),
  'paths': [('EEN', 'EEN', 'EEN'), ('NEE', 'NEE', 'NEE')],
  'tableaux': [((1, 3, 6, 9), (2, 5, 7, 11), (4, 8, 10, 12)), ((1, 3, 5, 9), (2, 6, 8, 11), (4, 7, 10, 12))],
  'rects': [((0, 0, 1, 4), (1, 0, 2, 4), (2, 0, 4, 1), (2, 1, 4, 4)),
            ((0, 0, 2, 3), (0, 3, 2, 4), (2, 0, 3, 4), (3, 0, 4, 4))],
  'pp': [((3, 3),), ((0, 0),)]},
 {'order': (2, 1),
  'baxter': ('1324',),
  'twisted': ('1324',),
  'paths': [('ENE', 'ENE', 'ENE')],
  'tableaux': [((1, 3, 5, 7), (2, 4, 9, 11), (6, 8, 10, 12))],
  'rects': [((0, 0, 1, 4), (1, 0, 3, 2), (1, 2, 3, 4), (3, 0, 4, 4))],
  'pp': [((3, 0),)]},
 {'order': (2, 1),
  'baxter': ('1342', '3124'),
  'twisted': ('1342', '3124'),
  'paths': [('ENE', 'EEN', 'EEN'), ('NEE', 'NEE', 'ENE')],
  'tableaux': [((1, 3, 6, 9), (2, 4, 8, 11), (5, 7, 10, 12)), ((1, 3, 6, 8), (2, 5, 9, 11), (4, 7, 10, 12))],
  'rects': [((0, 0, 1, 4), (1, 0, 3, 2), (1, 2, 4, 4), (3, 0, 4, 2)),
            ((0, 0, 3, 2), (0, 2, 1, 4), (1, 2, 3, 4), (3, 0, 4, 4))],
  'pp': [((3, 2),), ((1, 0),)]},
 {'order': (2, 1),
  'baxter': ('1423', '2314'),
  'twisted': ('1423', '2314'),
  'paths': [('ENE', 'ENE', 'EEN'), ('NEE', 'ENE', 'ENE')],
  'tableaux': [((1, 3, 5, 7), (2, 6, 9, 11), (4, 8, 10, 12)), ((1, 3, 5, 9), (2, 4, 7, 11), (6, 8, 10, 12))],
  'rects': [((0, 0, 1, 4), (1, 0, 4, 1), (1, 1, 2, 4), (2, 1, 4, 4)),
            ((0, 0, 2, 3), (0, 3, 3, 4), (2, 0, 3, 3), (3, 0, 4, 4))],
  'pp': [((3, 1),), ((2, 0),)]},
 {'order': (2, 1),
  'baxter': ('2341', '4123'),
  'twisted': ('2341', '4123'),
  'paths': [('NEE', 'EEN', 'EEN'), ('NEE', 'NEE', 'EEN')],
  'tableaux': [((1, 4, 6, 9), (2, 5, 8, 11), (3, 7, 10, 12)), ((1, 3, 6, 10), (2, 5, 8, 11), (4, 7, 9, 12))],
  'rects': [((0, 0, 2, 3), (0, 3, 4, 4), (2, 0, 3, 3), (3, 0, 4, 3)),
            ((0, 0, 4, 1), (0, 1, 1, 4), (1, 1, 2, 4), (2, 1, 4, 4))],
  'pp': [((2, 2),), ((1, 1),)]},
 {'order': (2, 1),
  'baxter': ('3412',),
  'twisted': ('3142',),
  'paths': [('NEE', 'ENE', 'EEN')],
  'tableaux': [((1, 3, 7, 9), (2, 5, 8, 11), (4, 6, 10, 12))],
  'rects': [((0, 0, 3, 2), (0, 2, 1, 4), (1, 2, 4, 4), (3, 0, 4, 2))],
  'pp': [((2, 1),)]},
 {'order': (1, 2),
  'baxter': ('1432', '3214'),
  'twisted': ('1432', '3214'),
  'paths': [('NNE', 'ENN', 'ENN'), ('NNE', 'NNE', 'ENN')],
  'tableaux': [((1, 3, 6, 9), (2, 4, 7, 11), (5, 8, 10, 12)), ((1, 3, 5, 8), (2, 6, 9, 11), (4, 7, 10, 12))],
  'rects': [((0, 0, 1, 4), (1, 0, 4, 1), (1, 1, 4, 2), (1, 2, 4, 4)),
            ((0, 0, 3, 2), (0, 2, 3, 3), (0, 3, 3, 4), (3, 0, 4, 4))],
  'pp': [((2,), (2,)), ((1,), (1,))]},
 {'order': (1, 2),
  'baxter': ('2143',),
  'twisted': ('2143',),
  'paths': [('NNE', 'NEN', 'ENN')],
  'tableaux': [((1, 3, 6, 8), (2, 4, 9, 11), (5, 7, 10, 12))],
  'rects': [((0, 0, 2, 3), (0, 3, 2, 4), (2, 0, 4, 1), (2, 1, 4, 4))],
  'pp': [((2,), (1,))]},
 {'order': (1, 2),
  'baxter': ('2431', '4213'),
  'twisted': ('2431', '4213'),
  'paths': [('NEN', 'ENN', 'ENN'), ('NNE', 'NNE', 'NEN')],
  'tableaux': [((1, 4, 6, 9), (2, 5, 7, 11), (3, 8, 10, 12)), ((1, 3, 5, 10), (2, 6, 8, 11), (4, 7, 9, 12))],
  'rects': [((0, 0, 2, 3), (0, 3, 4, 4), (2, 0, 4, 1), (2, 1, 4, 3)),
            ((0, 0, 4, 1), (0, 1, 2, 3), (0, 3, 2, 4), (2, 1, 4, 4))],
  'pp': [((3,), (2,)), ((1,), (0,))]},
 {'order': (1, 2),
  'baxter': ('3241', '4132'),
  'twisted': ('3241', '4132'),
  'paths': [('NEN', 'NEN', 'ENN'), ('NNE', 'NEN', 'NEN')],
  'tableaux': [((1, 4, 6, 8), (2, 5, 9, 11), (3, 7, 10, 12)), ((1, 3, 6, 10), (2, 4, 8, 11), (5, 7, 9, 12))],
  'rects': [((0, 0, 3, 2), (0, 2, 3, 3), (0, 3, 4, 4), (3, 0, 4, 3)),
            ((0, 0, 4, 1), (0, 1, 1, 4), (1, 1, 4, 2), (1, 2, 4, 4))],
  'pp': [((3,), (1,)), ((2,), (0,))]},
 {'order': (1, 2),
  'baxter': ('3421', '4312'),
  'twisted': ('3421', '4312'),
  'paths': [('ENN', 'ENN', 'ENN'), ('NNE', 'NNE', 'NNE')],
  'tableaux': [((1, 4, 7, 9), (2, 5, 8, 11), (3, 6, 10, 12)), ((1, 3, 7, 10), (2, 5, 8, 11), (4, 6, 9, 12))],
  'rects': [((0, 0, 3, 2), (0, 2, 4, 3), (0, 3, 4, 4), (3, 0, 4, 2)),
            ((0, 0, 4, 1), (0, 1, 4, 2), (0, 2, 1, 4), (1, 2, 4, 4))],
  'pp': [((3,), (3,)), ((0,), (0,))]},
 {'order': (1, 2),
  'baxter': ('4231',),
  'twisted': ('4231',),
  'paths': [('NEN', 'NEN', 'NEN')],
  'tableaux': [((1, 4, 6, 10), (2, 5, 8, 11), (3, 7, 9, 12))],
  'rects': [((0, 0, 4, 1), (0, 1, 2, 3), (0, 3, 4, 4), (2, 1, 4, 3))],
  'pp': [((3,), (0,))]},
 {'order': (0, 3),
  'baxter': ('4321',),
  'twisted': ('4321',),
  'paths': [('NNN', 'NNN', 'NNN')],
  'tableaux': [((1, 4, 7, 10), (2, 5, 8, 11), (3, 6, 9, 12))],
  'rects': [((0, 0, 4, 1), (0, 1, 4, 2), (0, 2, 4, 3), (0, 3, 4, 4))],
  'pp': [((), (), ())]}]

THETA_Q_21 = [1, 1, 2, 2, 2, 1, 1]

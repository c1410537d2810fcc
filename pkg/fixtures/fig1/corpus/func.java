public static List<Integer> func(int x) {
    List<Integer> n = IntStream.range(0, x).toArray();
    List<Integer> list = new ArrayList<Integer>();
    for (int i = 0; i < n.length(); i++) {
        if (n.get(i) % 2 == 0) {
            list.add(n.get(i));
        }
    }
    return list;
}

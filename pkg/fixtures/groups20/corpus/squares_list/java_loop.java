import java.util.ArrayList;
import java.util.List;

static List<Integer> squaresList(int n) {
    List<Integer> values = new ArrayList<Integer>();
    for (int i = 0; i < n; i++) {
        values.add(i * i);
    }
    return values;
}
